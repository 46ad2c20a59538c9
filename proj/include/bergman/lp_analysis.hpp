#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "bergman/basis.hpp"
#include "bergman/integrate.hpp"
#include "bergman/kernels.hpp"
#include "bergman/rational.hpp"

namespace bergman {

/// Open interval of L^p exponents on which the Bergman projection of a
/// Hartogs domain with parameters (n, k) is bounded. The endpoints
///   p_low = (2nk+2)/(nk+2),  p_high = (2nk+2)/(nk)
/// are exact rationals and Hoelder conjugates of each other.
struct ExponentInterval {
    Rational p_low;
    Rational p_high;

    bool contains(const Rational& p) const { return p_low < p && p < p_high; }
};

inline ExponentInterval critical_interval(int n, int k) {
    if (n < 1 || k < 1) throw ContractViolation("critical_interval requires n, k >= 1");
    const long long nk = static_cast<long long>(n) * k;
    return {Rational(2 * nk + 2, nk + 2), Rational(2 * nk + 2, nk)};
}

/// Strict test: the endpoints themselves are unbounded exponents.
inline bool is_bounded(const Rational& p, int n, int k) {
    if (!(Rational(1) < p)) throw ContractViolation("is_bounded requires p > 1");
    return critical_interval(n, k).contains(p);
}

inline bool is_bounded(double p, int n, int k) { return is_bounded(Rational::from_double(p), n, k); }

/// The radial integral behind the unboundedness direction,
///   2 pi^{n+1} * Int_0^1 r^{1 - pnk + 2nk} dr = 2 pi^{n+1} / (2 - pnk + 2nk),
/// finite exactly when p < (2 + 2nk)/(nk). This is the L^p norm (to the p-th
/// power) of the projected conjugate monomial on Omega_k up to its constant;
/// the H_k variant carries an extra 1/n! factor. Returns nullopt when the
/// integral diverges; the finiteness decision is made in exact rational
/// arithmetic.
inline std::optional<double> radial_lp_integral(const Rational& p, int n, int k) {
    if (!(Rational(0) < p)) throw ContractViolation("radial_lp_integral requires p > 0");
    const long long nk = static_cast<long long>(n) * k;
    if (!(p < Rational(2 * nk + 2, nk))) return std::nullopt;
    const double denom = 2.0 - p.value() * static_cast<double>(nk) + 2.0 * static_cast<double>(nk);
    return 2.0 * ipow(kPi, n + 1) / denom;
}

inline std::optional<double> radial_lp_integral(double p, int n, int k) {
    return radial_lp_integral(Rational::from_double(p), n, k);
}

/// Closed form of the integral mc_lp_norm estimates, when finite.
inline std::optional<double> lp_norm_closed(const DomainSpec& spec, double p) {
    detail::require_hartogs(spec, "lp_norm_closed");
    auto v = radial_lp_integral(p, spec.n, spec.k);
    if (!v) return std::nullopt;
    return spec.kind == DomainKind::HartogsBall ? *v / factorial(spec.n) : *v;
}

/// Monte Carlo estimate of Int |x|^{-pnk} dV over the domain, the quantity
/// whose finiteness switches exactly at p_high.
inline IntegralEstimate mc_lp_norm(const DomainSpec& spec, double p, std::uint64_t seed,
                                   std::size_t count, std::uint64_t stream = 0) {
    detail::require_hartogs(spec, "mc_lp_norm");
    if (!(p > 0.0)) throw ContractViolation("mc_lp_norm requires p > 0");
    const double exponent = -p * spec.n * spec.k;
    return integrate_mc(
        spec, [&](const CPoint& x) { return Complex(std::pow(std::abs(x.base()), exponent), 0.0); }, seed,
        count, stream);
}

/// Count-quadrupling instability probe: two estimates on disjoint substreams
/// at count and 4x count. In the divergent regime the estimate keeps growing
/// with the sample size; "triggered" means the larger-count estimate exceeds
/// the smaller by more than 3 combined standard errors.
struct DivergenceDiagnostic {
    IntegralEstimate at_count;
    IntegralEstimate at_4x_count;
    bool triggered = false;
};

inline DivergenceDiagnostic divergence_diagnostic(const DomainSpec& spec, double p, std::uint64_t seed,
                                                  std::size_t count) {
    DivergenceDiagnostic d;
    d.at_count = mc_lp_norm(spec, p, seed, count, /*stream=*/1);
    d.at_4x_count = mc_lp_norm(spec, p, seed, 4 * count, /*stream=*/2);
    const double gap = d.at_4x_count.value.real() - d.at_count.value.real();
    d.triggered = gap > 3.0 * std::hypot(d.at_count.std_error, d.at_4x_count.std_error);
    return d;
}

/// Which Schur weight to use. Auto pairs each family with the weight that is
/// strictly positive on it: the ball-deficit weight h on H_k and the
/// per-coordinate polydisc-deficit weight g on Omega_k. (h changes sign on
/// Omega_k away from H_k, so the flipped pairing is only meaningful on H_k.)
enum class SchurWeight { Auto, BallDeficit, PolydiscDeficit };

/// Schur test weight:
///   h(x, y) = (1 - |x|^2) |x|^{2k(n-1)} (|x|^{2k} - |y_1|^2 - ... - |y_n|^2)
///   g(x, y) = (1 - |x|^2) (|x|^{2k} - |y_1|^2) ... (|x|^{2k} - |y_n|^2)
/// Positive on interior points under the Auto pairing; vanishes on the
/// boundary.
inline double schur_weight(const DomainSpec& spec, const CPoint& q, SchurWeight kind = SchurWeight::Auto) {
    detail::require_hartogs(spec, "schur_weight");
    if (!contains(spec, q)) throw ContractViolation("schur_weight requires a strictly interior point");
    if (kind == SchurWeight::Auto)
        kind = spec.kind == DomainKind::HartogsBall ? SchurWeight::BallDeficit : SchurWeight::PolydiscDeficit;
    const double x2 = std::norm(q.base());
    const double x2k = ipow(x2, spec.k);
    double w = 1.0 - x2;
    if (kind == SchurWeight::BallDeficit) {
        double fiber = 0.0;
        for (int j = 0; j < spec.n; ++j) fiber += std::norm(q.fiber(j));
        w *= ipow(x2, static_cast<long long>(spec.k) * (spec.n - 1)) * (x2k - fiber);
    } else {
        for (int j = 0; j < spec.n; ++j) w *= x2k - std::norm(q.fiber(j));
    }
    if (!(w > 0.0))
        throw ContractViolation("schur weight is not positive at this point under the requested pairing");
    return w;
}

/// The admissible exponent range of the Schur weights: [1/2, (kn+2)/(2kn)).
struct SchurWeightSpec {
    double epsilon;
    DomainSpec domain;

    bool in_range() const {
        const double upper = (domain.k * domain.n + 2.0) / (2.0 * domain.k * domain.n);
        return epsilon >= 0.5 && epsilon < upper;
    }
};

struct SchurRatio {
    double ratio = 0.0;
    double std_error = 0.0;
    bool eps_in_range = true;  // false for exploratory out-of-range sweeps
};

/// Monte Carlo estimate of
///   Int |K(query, .)| weight(.)^{-eps} dV  /  weight(query)^{-eps},
/// the quantity the Schur test bounds by a constant independent of the query.
/// Exponents below 1/2 are rejected; exponents at or above the range's upper
/// end are allowed for empirical sweeps and flagged in the result.
inline SchurRatio schur_ratio(const DomainSpec& spec, double eps, const CPoint& query, std::uint64_t seed,
                              std::size_t count, SchurWeight kind = SchurWeight::Auto,
                              std::uint64_t stream = 0) {
    detail::require_hartogs(spec, "schur_ratio");
    if (!(eps >= 0.5)) throw ContractViolation("schur_ratio requires eps >= 1/2");
    if (!contains(spec, query)) throw ContractViolation("schur_ratio requires a strictly interior query");
    const IntegralEstimate lhs = integrate_mc(
        spec,
        [&](const CPoint& x) {
            return Complex(std::abs(kernel_closed(spec, query, x)) * std::pow(schur_weight(spec, x, kind), -eps),
                           0.0);
        },
        seed, count, stream);
    const double scale = std::pow(schur_weight(spec, query, kind), eps);
    return {lhs.value.real() * scale, lhs.std_error * scale,
            SchurWeightSpec{eps, spec}.in_range()};
}

} // namespace bergman
