#pragma once

#include <cmath>
#include <vector>

#include "bergman/domain.hpp"
#include "bergman/errors.hpp"
#include "bergman/rng.hpp"

namespace bergman {

/// Seeded stream of i.i.d. uniform points of a domain. Streams with distinct
/// stream indices are disjoint reproducible substreams of the same seed, so
/// parallel consumers can split work deterministically.
///
/// Construction is exact inverse-CDF, never rejection:
///   - base radius of a Hartogs domain: r = U^{1/(2kn+2)}, the inverse CDF of
///     the pushforward density proportional to r^{2kn+1};
///   - fiber of Omega_k: independent uniform discs of radius r^k;
///   - fiber of H_k (and the Ball): normalized Gaussian direction times
///     radius U^{1/(2n)}, scaled by r^k.
class SampleStream {
public:
    SampleStream(DomainSpec spec, std::uint64_t seed, std::uint64_t stream = 0)
        : spec_(spec), rng_(seed, stream) {}

    const DomainSpec& spec() const { return spec_; }

    CPoint next() {
        CPoint p;
        next_into(p);
        return p;
    }

    /// Overwrites p with the next point, reusing its storage.
    void next_into(CPoint& p) {
        p.coords.resize(spec_.ambient_dim());
        switch (spec_.kind) {
            case DomainKind::UnitDisc:
                p.coords[0] = rng_.unit_disc();
                return;
            case DomainKind::PuncturedDisc: {
                Complex z = rng_.unit_disc();
                while (z == Complex(0.0)) z = rng_.unit_disc();  // measure-zero puncture
                p.coords[0] = z;
                return;
            }
            case DomainKind::Polydisc:
                for (int j = 0; j < spec_.n; ++j) p.coords[j] = rng_.unit_disc();
                return;
            case DomainKind::Ball:
                fill_ball(p.coords.data(), spec_.n, 1.0);
                return;
            case DomainKind::HartogsPolydisc: {
                const double rk = base_into(p);
                for (int j = 0; j < spec_.n; ++j) p.coords[1 + j] = rk * rng_.unit_disc();
                return;
            }
            case DomainKind::HartogsBall: {
                const double rk = base_into(p);
                fill_ball(p.coords.data() + 1, spec_.n, rk);
                return;
            }
        }
    }

private:
    double base_into(CPoint& p) {
        const double r = std::pow(rng_.uniform_open(), 1.0 / (2.0 * spec_.k * spec_.n + 2.0));
        const double t = rng_.uniform_angle();
        p.coords[0] = {r * std::cos(t), r * std::sin(t)};
        return ipow(r, spec_.k);
    }

    void fill_ball(Complex* out, int n, double radius) {
        double norm2 = 0.0;
        for (int j = 0; j < n; ++j) {
            out[j] = {rng_.gaussian(), rng_.gaussian()};
            norm2 += std::norm(out[j]);
        }
        const double scale = radius * std::pow(rng_.uniform(), 1.0 / (2.0 * n)) / std::sqrt(norm2);
        for (int j = 0; j < n; ++j) out[j] *= scale;
    }

    DomainSpec spec_;
    Rng rng_;
};

/// `count` uniform points, reproducible from (seed, stream).
inline std::vector<CPoint> sample(const DomainSpec& spec, std::uint64_t seed, std::size_t count,
                                  std::uint64_t stream = 0) {
    if (count < 1) throw ContractViolation("sample requires count >= 1");
    SampleStream s(spec, seed, stream);
    std::vector<CPoint> out(count);
    for (auto& p : out) s.next_into(p);
    return out;
}

} // namespace bergman
