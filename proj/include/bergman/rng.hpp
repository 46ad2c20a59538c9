#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "bergman/numeric.hpp"

namespace bergman {

/// Deterministic random source. The engine is a Mersenne twister seeded from
/// (seed, stream); uniform and Gaussian variates are derived by fixed
/// arithmetic rather than std::*_distribution, so streams are identical
/// across standard libraries, not just across runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        engine_.seed(seq);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe as an argument of log or negative powers.
    double uniform_pos() { return 1.0 - uniform(); }

    /// Uniform on the open interval (0, 1): midpoints (i + 1/2) / 2^53.
    double uniform_open() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

    double uniform_angle() { return 2.0 * kPi * uniform(); }

    /// Standard normal via Box-Muller, one spare cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double t = uniform_angle();
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    /// Uniform point of the unit disc (area measure).
    Complex unit_disc() {
        const double r = std::sqrt(uniform());
        const double t = uniform_angle();
        return {r * std::cos(t), r * std::sin(t)};
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace bergman
