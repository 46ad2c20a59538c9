#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "bergman/basis.hpp"
#include "bergman/domain.hpp"
#include "bergman/errors.hpp"
#include "bergman/numeric.hpp"

namespace bergman {

/// A kernel evaluation request K(p, q); p is the holomorphic slot, q enters
/// conjugated. Diagonal queries (p == q) give the real positive values.
struct KernelQuery {
    DomainSpec spec;
    CPoint p;
    CPoint q;
};

namespace detail {

inline void require_nonzero(const Complex& denom, const char* what) {
    if (denom == Complex(0.0)) throw PoleError(std::string("kernel pole: ") + what + " vanishes");
}

} // namespace detail

/// Closed-form Bergman kernel. With eta = z conj(x) and nu_j = w_j conj(y_j):
///
///   disc:      1 / (pi (1 - eta)^2)            (the puncture is removable)
///   polydisc:  pi^{-n} prod_j (1 - z_j conj(x_j))^{-2}
///   ball:      (n! / pi^n) (1 - <z,x>)^{-(n+1)}
///   Omega_k:   eta^{nk} / (pi^{n+1} (1 - eta)^2 prod_j (eta^k - nu_j)^2)
///   H_k:       n! eta^k / (pi^{n+1} (1 - eta)^2 (eta^k - nu_1 - ... - nu_n)^{n+1})
///
/// Powers of eta are exact integer powers, never exp/log, so there is no
/// branch-cut ambiguity. Evaluation arbitrarily close to a pole is allowed;
/// only an exactly zero denominator raises PoleError.
inline Complex kernel_closed(const DomainSpec& spec, const CPoint& p, const CPoint& q) {
    require_dim(spec, p);
    require_dim(spec, q);
    switch (spec.kind) {
        case DomainKind::UnitDisc:
        case DomainKind::PuncturedDisc: {
            const Complex d = 1.0 - p.coords[0] * std::conj(q.coords[0]);
            detail::require_nonzero(d, "1 - eta");
            return 1.0 / (kPi * d * d);
        }
        case DomainKind::Polydisc: {
            Complex denom = ipow(kPi, spec.n);
            for (int j = 0; j < spec.n; ++j) {
                const Complex d = 1.0 - p.coords[j] * std::conj(q.coords[j]);
                detail::require_nonzero(d, "1 - z_j conj(x_j)");
                denom *= d * d;
            }
            return 1.0 / denom;
        }
        case DomainKind::Ball: {
            Complex ip = 0.0;
            for (int j = 0; j < spec.n; ++j) ip += p.coords[j] * std::conj(q.coords[j]);
            const Complex d = 1.0 - ip;
            detail::require_nonzero(d, "1 - <z,x>");
            return factorial(spec.n) / ipow(kPi, spec.n) * ipow(d, -(spec.n + 1));
        }
        case DomainKind::HartogsPolydisc: {
            const Complex eta = p.base() * std::conj(q.base());
            const Complex one_minus = 1.0 - eta;
            detail::require_nonzero(one_minus, "1 - eta");
            const Complex etak = ipow(eta, spec.k);
            Complex denom = ipow(kPi, spec.n + 1) * one_minus * one_minus;
            for (int j = 0; j < spec.n; ++j) {
                const Complex d = etak - p.fiber(j) * std::conj(q.fiber(j));
                detail::require_nonzero(d, "eta^k - nu_j");
                denom *= d * d;
            }
            return ipow(eta, static_cast<long long>(spec.n) * spec.k) / denom;
        }
        case DomainKind::HartogsBall: {
            const Complex eta = p.base() * std::conj(q.base());
            const Complex one_minus = 1.0 - eta;
            detail::require_nonzero(one_minus, "1 - eta");
            Complex nu_sum = 0.0;
            for (int j = 0; j < spec.n; ++j) nu_sum += p.fiber(j) * std::conj(q.fiber(j));
            const Complex d = ipow(eta, spec.k) - nu_sum;
            detail::require_nonzero(d, "eta^k - sum nu_j");
            return factorial(spec.n) * ipow(eta, spec.k) /
                   (ipow(kPi, spec.n + 1) * one_minus * one_minus * ipow(d, spec.n + 1));
        }
    }
    throw ContractViolation("unknown domain kind");
}

inline Complex kernel_closed(const KernelQuery& query) {
    return kernel_closed(query.spec, query.p, query.q);
}

/// Orthogonal-series kernel: sum over admissible indices of
/// e_m(p) conj(e_m(q)) / ||e_m||^2. Terms are grouped into frontiers of
/// constant shifted-degree-plus-|beta| and the frontier is expanded until its
/// contribution drops below tol times the partial sum. A term with index
/// (alpha, beta) contributes eta^alpha nu^beta / ||e_m||^2; it is evaluated in
/// the factored form eta^{d - kn} prod_j (nu_j / eta^k)^{beta_j}, whose
/// factors all stay bounded on interior pairs.
inline Complex kernel_series(const DomainSpec& spec, const CPoint& p, const CPoint& q, double tol,
                             int max_frontiers = 500) {
    detail::require_hartogs(spec, "kernel_series");
    require_dim(spec, p);
    require_dim(spec, q);
    if (!(tol > 0.0)) throw ContractViolation("kernel_series requires tol > 0");

    const Complex eta = p.base() * std::conj(q.base());
    if (eta == Complex(0.0))
        throw PoleError("kernel pole: eta = 0 makes the negative-exponent terms singular");
    const Complex etak = ipow(eta, spec.k);
    std::vector<Complex> rho(spec.n);  // nu_j / eta^k
    for (int j = 0; j < spec.n; ++j) rho[j] = p.fiber(j) * std::conj(q.fiber(j)) / etak;
    const long long kn = static_cast<long long>(spec.k) * spec.n;

    Complex total = 0.0;
    MultiIndex m;
    for (int frontier = 0; frontier <= max_frontiers; ++frontier) {
        Complex shell = 0.0;
        for (int s = 0; s <= frontier; ++s) {
            const int d = frontier - s;
            m.alpha = d - static_cast<long long>(spec.k) * (s + spec.n);
            const Complex base_part = ipow(eta, d - kn);
            for (const auto& beta : detail::compositions(spec.n, s)) {
                Complex term = base_part;
                for (int j = 0; j < spec.n; ++j) term *= ipow(rho[j], beta[j]);
                m.beta = beta;
                shell += term / norm_sq(spec, m);
            }
        }
        total += shell;
        if (frontier > 0 && std::abs(shell) < tol * std::abs(total)) return total;
    }
    throw ConvergenceFailure("kernel_series frontier contribution did not decay within " +
                             std::to_string(max_frontiers) + " expansions on " + spec.str());
}

/// Kernel computed through the fiber-scaling biholomorphism and the product
/// kernel of disc x polydisc (Omega_k) or disc x ball (H_k):
///
///   K(p, q) = det J(p) * K_disc(z_p, z_q) * K_fiber(phi(p), phi(q)) * conj(det J(q))
///
/// Agrees with kernel_closed to machine precision; kept as an independent
/// evaluation route.
inline Complex kernel_via_transform(const DomainSpec& spec, const CPoint& p, const CPoint& q) {
    detail::require_hartogs(spec, "kernel_via_transform");
    const CPoint fp = phi(spec, p);
    const CPoint fq = phi(spec, q);
    const DomainSpec base(DomainKind::UnitDisc, 1);
    const DomainSpec fiber(spec.kind == DomainKind::HartogsPolydisc ? DomainKind::Polydisc : DomainKind::Ball,
                           spec.n);
    const CPoint base_p{fp.coords[0]}, base_q{fq.coords[0]};
    CPoint fiber_p, fiber_q;
    fiber_p.coords.assign(fp.coords.begin() + 1, fp.coords.end());
    fiber_q.coords.assign(fq.coords.begin() + 1, fq.coords.end());
    return phi_jacobian_det(spec, p) * kernel_closed(base, base_p, base_q) *
           kernel_closed(fiber, fiber_p, fiber_q) * std::conj(phi_jacobian_det(spec, q));
}

} // namespace bergman
