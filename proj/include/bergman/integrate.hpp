#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "bergman/domain.hpp"
#include "bergman/errors.hpp"
#include "bergman/numeric.hpp"
#include "bergman/sampling.hpp"

namespace bergman {

/// Tensor rule parameters: Gauss-Legendre points per radius-squared variable
/// and equispaced trapezoid points per angle (exact for trigonometric
/// polynomials of frequency below angular_order).
struct QuadratureRule {
    int radial_order = 16;
    int angular_order = 32;

    QuadratureRule() = default;
    QuadratureRule(int radial, int angular) : radial_order(radial), angular_order(angular) {
        if (radial_order < 2 || angular_order < 4)
            throw ContractViolation("QuadratureRule requires radial_order >= 2 and angular_order >= 4");
    }
};

struct IntegralEstimate {
    Complex value{};
    double std_error = 0.0;  // 0 for deterministic rules
    std::size_t node_count = 0;
};

namespace detail {

/// Gauss-Legendre nodes and weights on (0, 1): Newton iteration on P_n from
/// Chebyshev initial guesses, then an affine map from (-1, 1).
inline void gauss_legendre_01(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(order);
    weights.resize(order);
    for (int i = 0; i < order; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= order; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[order - 1 - i] = 0.5 * (1.0 + x);
        weights[order - 1 - i] = 0.5 / ((1.0 - x * x) * dp * dp) * 2.0;
    }
}

/// Iterates the tensor rule of a domain in fibered polar coordinates,
/// calling fn(point, weight) once per node. The Hartogs cusp at z = 0 is
/// straightened by integrating over base x unit fiber with the radial factor
/// r^{2kn} absorbed into the node weight, so every node is strictly interior.
template <typename Fn>
void for_each_quad_node(const DomainSpec& spec, const QuadratureRule& rule, Fn&& fn) {
    std::vector<double> t, glw;
    gauss_legendre_01(rule.radial_order, t, glw);
    const int A = rule.angular_order;
    const double angw = 2.0 * kPi / A;
    std::vector<double> cosv(A), sinv(A);
    for (int a = 0; a < A; ++a) {
        cosv[a] = std::cos(2.0 * kPi * a / A);
        sinv[a] = std::sin(2.0 * kPi * a / A);
    }

    const bool hartogs = spec.is_hartogs();
    const bool ball_fiber = spec.kind == DomainKind::Ball || spec.kind == DomainKind::HartogsBall;
    const int fiber_dim = hartogs ? spec.n : (spec.kind == DomainKind::Polydisc || spec.kind == DomainKind::Ball ? spec.n : 0);

    CPoint p;
    p.coords.resize(spec.ambient_dim());

    // One complex coordinate contributes (1/2) * glw * angw * scale2, where
    // scale2 is the squared radius of the disc it ranges over.
    if (!hartogs) {
        if (fiber_dim == 0) {  // UnitDisc / PuncturedDisc
            for (int i = 0; i < rule.radial_order; ++i) {
                const double r = std::sqrt(t[i]);
                const double w = 0.5 * glw[i] * angw;
                for (int a = 0; a < A; ++a) {
                    p.coords[0] = {r * cosv[a], r * sinv[a]};
                    fn(p, w);
                }
            }
            return;
        }
        // Polydisc / Ball: recurse over coordinates. For the ball the radii
        // nest: coordinate j ranges over the disc of squared radius
        // R2 = prod_{i<j}(1 - t_i).
        auto rec = [&](auto&& self, int j, double R2, double wacc) -> void {
            if (j == fiber_dim) {
                fn(p, wacc);
                return;
            }
            for (int i = 0; i < rule.radial_order; ++i) {
                const double s = std::sqrt(t[i] * (ball_fiber ? R2 : 1.0));
                const double w = wacc * 0.5 * glw[i] * angw * (ball_fiber ? R2 : 1.0);
                for (int a = 0; a < A; ++a) {
                    p.coords[j] = {s * cosv[a], s * sinv[a]};
                    self(self, j + 1, ball_fiber ? R2 * (1.0 - t[i]) : 1.0, w);
                }
            }
        };
        rec(rec, 0, 1.0, 1.0);
        return;
    }

    // Hartogs kinds: base disc with weight factor t^{kn}, fiber scaled by z^k.
    const long long kn = static_cast<long long>(spec.k) * spec.n;
    for (int i = 0; i < rule.radial_order; ++i) {
        const double r = std::sqrt(t[i]);
        const double wbase = 0.5 * glw[i] * angw * ipow(t[i], kn);
        for (int a = 0; a < A; ++a) {
            const Complex z{r * cosv[a], r * sinv[a]};
            const Complex zk = ipow(z, spec.k);
            p.coords[0] = z;
            auto rec = [&](auto&& self, int j, double R2, double wacc) -> void {
                if (j == spec.n) {
                    fn(p, wacc);
                    return;
                }
                for (int ii = 0; ii < rule.radial_order; ++ii) {
                    const double s = std::sqrt(t[ii] * (ball_fiber ? R2 : 1.0));
                    const double w = wacc * 0.5 * glw[ii] * angw * (ball_fiber ? R2 : 1.0);
                    for (int aa = 0; aa < A; ++aa) {
                        p.coords[1 + j] = zk * Complex{s * cosv[aa], s * sinv[aa]};
                        self(self, j + 1, ball_fiber ? R2 * (1.0 - t[ii]) : 1.0, w);
                    }
                }
            };
            rec(rec, 0, 1.0, wbase);
        }
    }
}

} // namespace detail

/// Tensor-product estimate of the integral of f over the domain, exact to
/// rounding for integrands that are polynomial in the fibered coordinates
/// within the rule's orders. Throws EvaluationError on a non-finite node.
template <typename Fn>
IntegralEstimate integrate_quad(const DomainSpec& spec, Fn&& f, const QuadratureRule& rule) {
    StreamingSum<Complex> sum;
    std::size_t index = 0;
    detail::for_each_quad_node(spec, rule, [&](const CPoint& p, double w) {
        const Complex v = f(p);
        if (!is_finite(v))
            throw EvaluationError("non-finite integrand at quadrature node " + std::to_string(index) +
                                  " of " + spec.str());
        sum.push(w * v);
        ++index;
    });
    return {sum.total(), 0.0, index};
}

/// Monte Carlo estimate: volume(spec) times the sample mean of f, with the
/// standard error volume * sd / sqrt(count). Non-finite draws are skipped up
/// to a 0.1% budget (singular integrands are expected to misbehave on a
/// vanishing fraction of draws near the degenerate corner); past the budget
/// the whole integral is an error.
template <typename Fn>
IntegralEstimate integrate_mc(const DomainSpec& spec, Fn&& f, std::uint64_t seed, std::size_t count,
                              std::uint64_t stream = 0) {
    if (count < 2) throw ContractViolation("integrate_mc requires count >= 2");
    SampleStream points(spec, seed, stream);
    std::vector<Complex> values;
    values.reserve(count);
    const std::size_t budget = count / 1000;
    std::size_t rejected = 0;
    CPoint p;
    for (std::size_t i = 0; i < count; ++i) {
        points.next_into(p);
        const Complex v = f(p);
        if (!is_finite(v)) {
            if (++rejected > budget)
                throw EvaluationError("non-finite sample values exceed the 0.1% budget on " + spec.str());
            continue;
        }
        values.push_back(v);
    }
    if (values.size() < 2) throw EvaluationError("too few finite samples on " + spec.str());
    const auto [mean, se] = mean_and_std_error(values);
    const double vol = volume(spec);
    return {vol * mean, vol * se, values.size()};
}

} // namespace bergman
