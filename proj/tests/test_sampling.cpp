#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "bergman/sampling.hpp"

using namespace bergman;

TEST_CASE("samples lie strictly inside the domain") {
    for (auto spec : {DomainSpec(DomainKind::UnitDisc, 1), DomainSpec(DomainKind::PuncturedDisc, 1),
                      DomainSpec(DomainKind::Polydisc, 2), DomainSpec(DomainKind::Ball, 2),
                      hartogs_polydisc(2, 2), hartogs_ball(2, 2)}) {
        SampleStream s(spec, 1);
        CPoint p;
        for (int i = 0; i < 20000; ++i) {
            s.next_into(p);
            if (!contains(spec, p)) {
                INFO(spec.str());
                FAIL("sampled point escaped the domain");
            }
        }
        SUCCEED();
    }
}

TEST_CASE("streams are deterministic and split disjointly") {
    const DomainSpec spec = hartogs_ball(2, 1);
    const auto a = sample(spec, 7, 50);
    const auto b = sample(spec, 7, 50);
    CHECK(a == b);

    const auto c = sample(spec, 7, 50, /*stream=*/1);
    CHECK(a != c);

    const auto d = sample(spec, 8, 50);
    CHECK(a != d);

    CHECK_THROWS_AS(sample(spec, 7, 0), ContractViolation);
}

TEST_CASE("sample moments match closed forms") {
    // E[|z|^2] on Omega_1 with n = k = 1: integral of r^2 against the
    // pushforward density (2kn+2) r^{2kn+1} dr = 4 r^3 dr, equal to 2/3.
    const DomainSpec spec = hartogs_polydisc(1, 1);
    SampleStream s(spec, 3);
    const std::size_t count = 400000;
    double sum = 0.0, sum2 = 0.0;
    CPoint p;
    for (std::size_t i = 0; i < count; ++i) {
        s.next_into(p);
        const double v = std::norm(p.base());
        sum += v;
        sum2 += v * v;
    }
    const double mean = sum / count;
    const double sd = std::sqrt((sum2 / count - mean * mean) / count);
    CHECK(std::abs(mean - 2.0 / 3.0) <= 3.0 * sd);
}

TEST_CASE("fiber fraction of the ball family is uniform in the ball") {
    // For H_k the fiber modulus over its bound, |w| / r^k, has CDF t^{2n} on
    // (0, 1); check the mean 2n/(2n+1) for n = 2.
    const DomainSpec spec = hartogs_ball(2, 3);
    SampleStream s(spec, 5);
    const std::size_t count = 200000;
    double sum = 0.0, sum2 = 0.0;
    CPoint p;
    for (std::size_t i = 0; i < count; ++i) {
        s.next_into(p);
        const double rk = ipow(std::abs(p.base()), spec.k);
        const double frac = std::sqrt(std::norm(p.fiber(0)) + std::norm(p.fiber(1))) / rk;
        sum += frac;
        sum2 += frac * frac;
    }
    const double mean = sum / count;
    const double sd = std::sqrt((sum2 / count - mean * mean) / count);
    CHECK(std::abs(mean - 4.0 / 5.0) <= 3.0 * sd);
}
