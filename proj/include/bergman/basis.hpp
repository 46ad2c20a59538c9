#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bergman/domain.hpp"
#include "bergman/errors.hpp"
#include "bergman/numeric.hpp"

namespace bergman {

/// Exponent of a Laurent monomial z^alpha w_1^{beta_1} ... w_n^{beta_n}.
/// alpha may be negative; the monomial is square-integrable on a Hartogs
/// domain with parameters (n, k) exactly when alpha >= -k(|beta| + n).
struct MultiIndex {
    long long alpha = 0;
    std::vector<int> beta;

    MultiIndex() = default;
    MultiIndex(long long a, std::vector<int> b) : alpha(a), beta(std::move(b)) {}

    long long beta_sum() const { return std::accumulate(beta.begin(), beta.end(), 0LL); }

    /// alpha + k(|beta| + n); non-negative exactly on admissible indices.
    long long shifted_degree(const DomainSpec& spec) const {
        return alpha + static_cast<long long>(spec.k) * (beta_sum() + spec.n);
    }

    std::string str() const {
        std::string s = "(" + std::to_string(alpha) + ";";
        for (std::size_t j = 0; j < beta.size(); ++j) s += (j ? "," : "") + std::to_string(beta[j]);
        return s + ")";
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.beta < b.beta;
    }
};

inline bool is_admissible(const DomainSpec& spec, const MultiIndex& m) {
    detail::require_hartogs(spec, "is_admissible");
    if (static_cast<int>(m.beta.size()) != spec.n)
        throw ContractViolation("multi-index has " + std::to_string(m.beta.size()) +
                                " fiber exponents, expected " + std::to_string(spec.n));
    for (int b : m.beta)
        if (b < 0) return false;
    return m.shifted_degree(spec) >= 0;
}

namespace detail {

/// s! / (beta_1! ... beta_n!) as an exact integer.
inline unsigned __int128 multinomial(const std::vector<int>& beta) {
    unsigned __int128 acc = 1;
    long long total = 0;
    for (int b : beta) {
        for (int i = 1; i <= b; ++i) {
            acc = acc * static_cast<unsigned __int128>(++total);
            acc /= static_cast<unsigned __int128>(i);
        }
    }
    return acc;
}

} // namespace detail

/// Exact squared L^2 norm of the monomial z^alpha w^beta over the domain.
///
///   Omega_k:  (2 pi)^{n+1} / [ prod_j (2 beta_j + 2) * (2 alpha + 2 + 2k(|beta|+n)) ]
///   H_k:      pi^{n+1} beta! / [ (n+|beta|)! * (alpha + k(|beta|+n) + 1) ]
///
/// Both come from one polar computation: the fiber integral leaves the base
/// factor r^{2 alpha + 2k(|beta|+n) + 1}, integrable exactly when the index is
/// admissible. The integer factors are built exactly and converted to double
/// at the end; beta!/(n+s)! is formed as 1 / (multinomial(s;beta) * (s+1)...(s+n))
/// so no factorial is ever materialized.
inline double norm_sq(const DomainSpec& spec, const MultiIndex& m) {
    if (!is_admissible(spec, m))
        throw ContractViolation("norm_sq of inadmissible index " + m.str() + " on " + spec.str());
    const long long s = m.beta_sum();
    const long long shifted = m.shifted_degree(spec);
    if (spec.kind == DomainKind::HartogsPolydisc) {
        double denom = 2.0 * static_cast<double>(shifted) + 2.0;
        for (int b : m.beta) denom *= 2.0 * b + 2.0;
        return ipow(2.0 * kPi, spec.n + 1) / denom;
    }
    // HartogsBall
    unsigned __int128 denom = detail::multinomial(m.beta);
    for (int i = 1; i <= spec.n; ++i) denom *= static_cast<unsigned __int128>(s + i);
    return ipow(kPi, spec.n + 1) / (static_cast<double>(denom) * (static_cast<double>(shifted) + 1.0));
}

/// Value of z^alpha w^beta at p. Negative alpha divides; interior points of a
/// Hartogs domain always have z != 0.
inline Complex eval_monomial(const MultiIndex& m, const CPoint& p) {
    Complex acc = ipow(p.base(), m.alpha);
    for (std::size_t j = 0; j < m.beta.size(); ++j) acc *= ipow(p.fiber(j), m.beta[j]);
    return acc;
}

namespace detail {

inline void compositions_rec(int parts, int total, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int head = 0; head <= total; ++head) {
        cur.push_back(head);
        compositions_rec(parts - 1, total - head, cur, out);
        cur.pop_back();
    }
}

/// All beta >= 0 with |beta| = total, ascending lexicographically.
inline std::vector<std::vector<int>> compositions(int parts, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    compositions_rec(parts, total, cur, out);
    return out;
}

} // namespace detail

/// All admissible indices with |beta| <= degree_cap and shifted degree
/// alpha + k(|beta|+n) <= degree_cap, each exactly once, ordered by
/// (shifted degree, |beta|, beta lexicographic). The order is fixed so that
/// truncated sums are bit-reproducible.
inline std::vector<MultiIndex> enumerate_basis(const DomainSpec& spec, int degree_cap) {
    detail::require_hartogs(spec, "enumerate_basis");
    if (degree_cap < 0) throw ContractViolation("enumerate_basis requires degree_cap >= 0");
    std::vector<MultiIndex> out;
    for (int d = 0; d <= degree_cap; ++d) {
        for (int s = 0; s <= degree_cap; ++s) {
            const long long alpha = d - static_cast<long long>(spec.k) * (s + spec.n);
            for (auto& beta : detail::compositions(spec.n, s)) out.emplace_back(alpha, std::move(beta));
        }
    }
    return out;
}

} // namespace bergman
