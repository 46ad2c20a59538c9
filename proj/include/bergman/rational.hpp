#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "bergman/errors.hpp"

namespace bergman {

/// Exact rational number on int64 with __int128 cross-multiplication, enough
/// headroom for every exponent comparison this library performs.
class Rational {
public:
    Rational() = default;
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }
    Rational(long long num) : num_(num), den_(1) {}  // intentionally implicit

    long long num() const { return num_; }
    long long den() const { return den_; }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "a/b", or just "a" when the denominator is 1.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw ContractViolation("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    /// Parses "a/b", an integer, or a decimal literal ("3.25", "-0.5"),
    /// all converted exactly.
    static Rational parse(std::string_view text);

    /// Exact conversion of a finite double (every finite double is rational).
    /// Throws if the reduced fraction does not fit in int64, which cannot
    /// happen for the exponent magnitudes used here.
    static Rational from_double(double x);

private:
    void normalize() {
        if (den_ == 0) throw ContractViolation("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
    const auto bad = [&] { return ContractViolation("cannot parse rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const std::string a(text.substr(0, slash));
        const std::string b(text.substr(slash + 1));
        if (a.empty() || b.empty()) throw bad();
        try {
            return Rational(std::stoll(a), std::stoll(b));
        } catch (const std::exception&) {
            throw bad();
        }
    }
    bool neg = false;
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    long long num = 0;
    long long den = 1;
    bool seen_digit = false;
    bool seen_dot = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.') {
            if (seen_dot) throw bad();
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9') throw bad();
        seen_digit = true;
        if (num > (INT64_MAX - 9) / 10) throw ContractViolation("rational literal too long");
        num = num * 10 + (c - '0');
        if (seen_dot) {
            if (den > INT64_MAX / 10) throw ContractViolation("rational literal too long");
            den *= 10;
        }
    }
    if (!seen_digit) throw bad();
    return Rational(neg ? -num : num, den);
}

inline Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw ContractViolation("cannot convert non-finite double to rational");
    int exp = 0;
    const double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    long long mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    if (mant == 0) return Rational(0);
    while (mant % 2 == 0 && exp < 0) {
        mant /= 2;
        ++exp;
    }
    if (exp >= 0) {
        if (exp > 9) throw ContractViolation("double too large for exact rational");
        return Rational(mant << exp, 1);
    }
    if (exp < -62) throw ContractViolation("double too small for exact rational");
    return Rational(mant, 1LL << (-exp));
}

} // namespace bergman
