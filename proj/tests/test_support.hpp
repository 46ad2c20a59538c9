#pragma once

// Shared generators for the randomized suites. Index draws are restricted to
// shifted degree >= 2 where Monte Carlo oracles are involved: products of two
// such monomials are square-integrable for kn <= 8, so the reported standard
// errors are meaningful.

#include <vector>

#include "bergman/basis.hpp"
#include "bergman/domain.hpp"
#include "bergman/projection.hpp"
#include "bergman/rng.hpp"

namespace test_support {

using namespace bergman;

inline MultiIndex random_index(Rng& rng, const DomainSpec& spec, int min_shift = 2, int max_shift = 6,
                               int max_beta_sum = 4) {
    const int d = min_shift + static_cast<int>(rng.uniform() * (max_shift - min_shift + 1));
    const int s = static_cast<int>(rng.uniform() * (max_beta_sum + 1));
    std::vector<int> beta(spec.n, 0);
    for (int unit = 0; unit < s; ++unit) beta[static_cast<int>(rng.uniform() * spec.n)] += 1;
    const long long alpha = d - static_cast<long long>(spec.k) * (s + spec.n);
    return {alpha, beta};
}

/// Interior point with |z| <= base_cap and fiber modulus at most fiber_cap of
/// its bound, uniformly oriented.
inline CPoint random_interior_point(Rng& rng, const DomainSpec& spec, double base_cap = 0.8,
                                    double fiber_cap = 0.8) {
    const double r = base_cap * std::sqrt(rng.uniform_open());
    const double t = rng.uniform_angle();
    CPoint p;
    p.coords.resize(spec.ambient_dim());
    p.coords[0] = {r * std::cos(t), r * std::sin(t)};
    const double rk = ipow(r, spec.k);
    if (spec.kind == DomainKind::HartogsPolydisc) {
        for (int j = 0; j < spec.n; ++j) {
            const double s = fiber_cap * rk * std::sqrt(rng.uniform());
            const double a = rng.uniform_angle();
            p.coords[1 + j] = {s * std::cos(a), s * std::sin(a)};
        }
    } else {
        double norm2 = 0.0;
        for (int j = 0; j < spec.n; ++j) {
            p.coords[1 + j] = {rng.gaussian(), rng.gaussian()};
            norm2 += std::norm(p.coords[1 + j]);
        }
        const double scale =
            fiber_cap * rk * std::pow(rng.uniform(), 1.0 / (2.0 * spec.n)) / std::sqrt(norm2);
        for (int j = 0; j < spec.n; ++j) p.coords[1 + j] *= scale;
    }
    return p;
}

/// Random finite admissible series with a handful of terms and O(1)
/// coefficients.
inline SeriesFunction random_series(Rng& rng, const DomainSpec& spec, int terms = 4, int min_shift = 2,
                                    int max_shift = 6, int max_beta_sum = 4) {
    SeriesFunction f(spec);
    for (int i = 0; i < terms; ++i) {
        const MultiIndex m = random_index(rng, spec, min_shift, max_shift, max_beta_sum);
        f.coeffs[m] = Complex(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
    }
    return f;
}

inline const std::vector<DomainSpec>& all_hartogs_specs() {
    static const std::vector<DomainSpec> specs = {
        hartogs_polydisc(1, 1), hartogs_polydisc(1, 2), hartogs_polydisc(2, 1), hartogs_polydisc(2, 2),
        hartogs_ball(1, 1),     hartogs_ball(1, 2),     hartogs_ball(2, 1),     hartogs_ball(2, 2),
    };
    return specs;
}

} // namespace test_support
