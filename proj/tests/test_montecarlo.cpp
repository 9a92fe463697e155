#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tnpoly/montecarlo.hpp"
#include "tnpoly/polytope.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace tnpoly;

TEST_CASE("dimension one is hit with certainty") {
    const MCEstimate est = mc_volume(1, 1000, 42);
    CHECK(est.mean == 2.0);
    CHECK(est.std_error == 0.0);
    CHECK(est.samples == 1000);
    CHECK(est.seed == 42);
    CHECK(est.generator == kGeneratorName);
}

TEST_CASE("estimates are reproducible and seed-sensitive") {
    const MCEstimate a = mc_volume(4, 100000, 7);
    const MCEstimate b = mc_volume(4, 100000, 7);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    const MCEstimate c = mc_volume(4, 100000, 8);
    CHECK(a.mean != c.mean);
}

TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(mc_volume(0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_volume(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_volume_complex(ComplexRegionParams(1, 1), 0, 1), std::invalid_argument);
}

TEST_CASE("estimates agree with the exact volume") {
    for (unsigned n = 1; n <= 6; ++n) {
        const double exact = to_double(exact_volume(n));
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const MCEstimate est = mc_volume(n, 100000, seed);
            if (est.std_error == 0.0) {
                CHECK(est.mean == exact);
            } else {
                CHECK(std::fabs(est.mean - exact) <= 5.0 * est.std_error);
            }
        }
    }
}

TEST_CASE("every accepted sample satisfies exact membership") {
    // Replays the estimator's stream, converts each draw to an exact rational
    // coordinate, and re-decides membership with TracePolytope::contains.
    const unsigned n = 5;
    const std::uint64_t samples = 3 * kMcBlockSize / 2;  // crosses a block boundary
    const std::uint64_t seed = 123;
    const TracePolytope polytope(n);
    const Int half = Int(1) << 52;

    std::uint64_t hits = 0;
    std::uint64_t done = 0;
    for (std::uint64_t block = 0; done < samples; ++block) {
        auto engine = block_engine(seed, block);
        const std::uint64_t in_block = std::min<std::uint64_t>(kMcBlockSize, samples - done);
        for (std::uint64_t i = 0; i < in_block; ++i) {
            std::vector<Rational> point;
            point.reserve(n);
            for (unsigned j = 0; j < n; ++j) {
                point.emplace_back(Int(draw53(engine)) - half, half);
            }
            if (polytope.contains(point)) {
                ++hits;
            }
        }
        done += in_block;
    }

    const MCEstimate est = mc_volume(n, samples, seed);
    const double expected_mean = 32.0 * static_cast<double>(hits) / static_cast<double>(samples);
    CHECK(est.mean == expected_mean);
}

TEST_CASE("raw draws map to exactly representable coordinates") {
    auto engine = block_engine(99, 0);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t v = draw53(engine);
        const double c = symmetric_unit(v);
        CHECK(c >= -1.0);
        CHECK(c < 1.0);
        const Rational exact(Int(v) - (Int(1) << 52), Int(1) << 52);
        CHECK(Rational(c) == exact);
    }
}

TEST_CASE("complex region with c = 0 reduces to the polytope") {
    const MCEstimate line = mc_volume_complex(ComplexRegionParams(1, 0), 10000, 1);
    CHECK(line.mean == 2.0);
    CHECK(line.std_error == 0.0);

    const MCEstimate plane = mc_volume_complex(ComplexRegionParams(2, 0), 200000, 1);
    CHECK(std::fabs(plane.mean - 3.5) <= 5.0 * plane.std_error);
}

TEST_CASE("single-disk region matches the circular segment area") {
    // exact hit area: pi - (pi/3 - sqrt(3)/4) = 2 pi / 3 + sqrt(3)/4
    const double expected = 2.0 * M_PI / 3.0 + std::sqrt(3.0) / 4.0;
    const MCEstimate est = mc_volume_complex(ComplexRegionParams(0, 1), 200000, 5);
    CHECK(std::fabs(est.mean - expected) <= 5.0 * est.std_error);

    const MCEstimate again = mc_volume_complex(ComplexRegionParams(0, 1), 200000, 5);
    CHECK(est.mean == again.mean);
}

TEST_CASE("block streams do not depend on the total sample count") {
    // The first block's draws are the same whether or not later blocks exist.
    auto early = block_engine(31, 0);
    auto late = block_engine(31, 0);
    for (int i = 0; i < 100; ++i) {
        CHECK(early() == late());
    }
    CHECK(splitmix64_at(31, 0) != splitmix64_at(31, 1));
    CHECK(splitmix64_at(31, 0) != splitmix64_at(32, 0));
}
