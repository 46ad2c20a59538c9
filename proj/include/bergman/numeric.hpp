#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace bergman {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// z^e for integer e by binary exponentiation. Exact repeated multiplication,
/// no complex log, so integer powers of negative reals stay on the real axis.
inline Complex ipow(Complex z, long long e) {
    if (e < 0) return 1.0 / ipow(z, -e);
    Complex acc = 1.0;
    while (e > 0) {
        if (e & 1) acc *= z;
        z *= z;
        e >>= 1;
    }
    return acc;
}

inline double ipow(double x, long long e) {
    if (e < 0) return 1.0 / ipow(x, -e);
    double acc = 1.0;
    while (e > 0) {
        if (e & 1) acc *= x;
        x *= x;
        e >>= 1;
    }
    return acc;
}

namespace detail {

template <typename T>
T pairwise_sum_impl(std::span<const T> v) {
    if (v.size() <= 32) {
        T acc{};
        for (const T& x : v) acc += x;
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum_impl(v.subspan(0, half)) + pairwise_sum_impl(v.subspan(half));
}

} // namespace detail

/// Pairwise-tree reduction in index order; the result is independent of how
/// the values were produced, which keeps seeded runs bit-identical.
template <typename T>
T pairwise_sum(std::span<const T> v) {
    return detail::pairwise_sum_impl(v);
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
    return detail::pairwise_sum_impl(std::span<const T>(v));
}

/// Mean and standard error of a complex sample, deviations measured in the
/// complex modulus. Requires at least two values.
struct MeanAndError {
    Complex mean;
    double std_error = 0.0;
};

inline MeanAndError mean_and_std_error(std::span<const Complex> values) {
    const auto n = static_cast<double>(values.size());
    const Complex mean = pairwise_sum(values) / n;
    std::vector<double> dev2(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) dev2[i] = std::norm(values[i] - mean);
    const double var = pairwise_sum(std::span<const double>(dev2)) / (n - 1.0);
    return {mean, std::sqrt(var / n)};
}

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// n! as a double, computed by exact integer products (exact through 18!,
/// correctly rounded far beyond anything this library enumerates).
inline double factorial(int n) {
    double acc = 1.0;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

/// Pairwise reduction over a stream too large to materialize: consecutive
/// blocks of 4096 values are summed in index order and the block sums are
/// combined as a pairwise tree, so the result depends only on the value
/// sequence.
template <typename T>
class StreamingSum {
public:
    void push(const T& x) {
        block_ += x;
        if (++fill_ == kBlock) {
            partials_.push_back(block_);
            block_ = T{};
            fill_ = 0;
        }
    }

    T total() const {
        T tail = block_;
        if (partials_.empty()) return tail;
        return pairwise_sum(std::span<const T>(partials_)) + tail;
    }

    std::size_t count() const { return partials_.size() * kBlock + fill_; }

private:
    static constexpr std::size_t kBlock = 4096;
    std::vector<T> partials_;
    T block_{};
    std::size_t fill_ = 0;
};

} // namespace bergman
