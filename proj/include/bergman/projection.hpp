#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "bergman/basis.hpp"
#include "bergman/integrate.hpp"
#include "bergman/kernels.hpp"

namespace bergman {

/// A finite linear combination of admissible basis monomials.
struct SeriesFunction {
    DomainSpec spec;
    std::map<MultiIndex, Complex> coeffs;

    SeriesFunction() = default;
    explicit SeriesFunction(DomainSpec s) : spec(s) {}

    void set(const MultiIndex& m, Complex c) {
        if (!is_admissible(spec, m))
            throw ContractViolation("SeriesFunction coefficient at inadmissible index " + m.str());
        coeffs[m] = c;
    }

    Complex eval(const CPoint& p) const {
        Complex acc = 0.0;
        for (const auto& [m, c] : coeffs) acc += c * eval_monomial(m, p);
        return acc;
    }

    /// Largest coefficient modulus outside the given index.
    double max_coeff_except(const MultiIndex& keep) const {
        double worst = 0.0;
        for (const auto& [m, c] : coeffs)
            if (!(m == keep)) worst = std::max(worst, std::abs(c));
        return worst;
    }
};

/// Orthogonal projection onto the truncated basis: coefficient
/// c_m = <f, e_m> / ||e_m||^2 with the inner products evaluated by the tensor
/// quadrature. For f already in the truncated span this recovers its
/// coefficients to quadrature precision, since the basis is exactly
/// orthogonal and the integrands are polynomial in the fibered coordinates.
template <typename Fn>
SeriesFunction project_series(const DomainSpec& spec, Fn&& f, int degree_cap, const QuadratureRule& rule) {
    detail::require_hartogs(spec, "project_series");
    const std::vector<MultiIndex> basis = enumerate_basis(spec, degree_cap);

    // Power-table ranges for conj(z)^alpha and conj(w_j)^{beta_j}.
    long long alpha_lo = 0, alpha_hi = 0;
    int beta_hi = 0;
    for (const auto& m : basis) {
        alpha_lo = std::min(alpha_lo, m.alpha);
        alpha_hi = std::max(alpha_hi, m.alpha);
        for (int b : m.beta) beta_hi = std::max(beta_hi, b);
    }

    std::vector<StreamingSum<Complex>> acc(basis.size());
    std::vector<Complex> zpow(alpha_hi - alpha_lo + 1);
    std::vector<std::vector<Complex>> wpow(spec.n, std::vector<Complex>(beta_hi + 1));
    std::size_t index = 0;

    detail::for_each_quad_node(spec, rule, [&](const CPoint& p, double w) {
        const Complex fv = f(p);
        if (!is_finite(fv))
            throw EvaluationError("non-finite integrand at quadrature node " + std::to_string(index) +
                                  " of " + spec.str());
        const Complex wf = w * fv;

        const Complex zc = std::conj(p.base());
        const Complex zc_inv = 1.0 / zc;
        zpow[-alpha_lo] = 1.0;
        for (long long e = 1; e <= alpha_hi; ++e) zpow[e - alpha_lo] = zpow[e - 1 - alpha_lo] * zc;
        for (long long e = -1; e >= alpha_lo; --e) zpow[e - alpha_lo] = zpow[e + 1 - alpha_lo] * zc_inv;
        for (int j = 0; j < spec.n; ++j) {
            const Complex wc = std::conj(p.fiber(j));
            wpow[j][0] = 1.0;
            for (int b = 1; b <= beta_hi; ++b) wpow[j][b] = wpow[j][b - 1] * wc;
        }

        for (std::size_t i = 0; i < basis.size(); ++i) {
            Complex mono = zpow[basis[i].alpha - alpha_lo];
            for (int j = 0; j < spec.n; ++j) mono *= wpow[j][basis[i].beta[j]];
            acc[i].push(wf * mono);
        }
        ++index;
    });

    SeriesFunction out(spec);
    for (std::size_t i = 0; i < basis.size(); ++i)
        out.coeffs.emplace(basis[i], acc[i].total() / norm_sq(spec, basis[i]));
    return out;
}

/// Bergman projection evaluated at one point by Monte Carlo:
/// integral of kernel_closed(eval_at, .) * f(.) over the domain. For bounded
/// holomorphic f this reproduces f(eval_at).
template <typename Fn>
IntegralEstimate project_kernel(const DomainSpec& spec, Fn&& f, const CPoint& eval_at,
                                std::uint64_t seed, std::size_t count, std::uint64_t stream = 0) {
    if (!contains(spec, eval_at))
        throw ContractViolation("project_kernel evaluation point must be strictly interior");
    return integrate_mc(
        spec, [&](const CPoint& x) { return kernel_closed(spec, eval_at, x) * f(x); }, seed, count, stream);
}

/// Exact projection of f(z, w) = conj(z)^{kn}: by rotation symmetry in every
/// coordinate only the z^{-kn} component survives, with coefficient
/// C = <conj(z)^{kn}, z^{-kn}> / ||z^{-kn}||^2 = volume / ||z^{-kn}||^2,
/// which equals 1/(kn+1) for both Hartogs families.
inline SeriesFunction project_conj_monomial(const DomainSpec& spec) {
    detail::require_hartogs(spec, "project_conj_monomial");
    const long long kn = static_cast<long long>(spec.k) * spec.n;
    const MultiIndex m(-kn, std::vector<int>(spec.n, 0));
    SeriesFunction out(spec);
    out.set(m, volume(spec) / norm_sq(spec, m));
    return out;
}

} // namespace bergman
