#pragma once

#include "tnpoly/polytope.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace tnpoly {

/// Hit-or-miss volume estimate. `mean` is the hit fraction scaled by the
/// ambient volume, `std_error` the binomial standard error scaled likewise.
/// `generator` records the PRNG identity; estimates are reproducible only
/// under the same generator configuration.
struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string generator;
};

// Deterministic stream machinery. Samples are partitioned into fixed-size
// blocks; block t draws from mt19937_64 seeded with splitmix64 output t of
// the user seed. The merged estimate therefore does not depend on how blocks
// are distributed over workers.
inline constexpr std::uint64_t kMcBlockSize = 1u << 16;
inline constexpr const char* kGeneratorName = "mt19937_64/splitmix64-blocks-65536";

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index);
std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block);

/// Raw 53-bit draw, the integer v in [0, 2^53) behind one uniform coordinate
/// (-1 + v / 2^52 covers [-1, 1)). Membership tests on these integers are
/// exact, so no accepted sample can violate the polytope constraints.
inline std::uint64_t draw53(std::mt19937_64& engine) {
    return engine() >> 11;
}

/// Coordinate in [-1, 1) for the raw draw; exactly representable in a double.
inline double symmetric_unit(std::uint64_t v) {
    return static_cast<double>(static_cast<std::int64_t>(v) - (INT64_C(1) << 52)) * 0x1.0p-52;
}

/// Monte Carlo volume of the trace nonnegative polytope T^n from `samples`
/// points uniform on [-1,1]^n. Reproducible for fixed (seed, samples).
MCEstimate mc_volume(unsigned n, std::uint64_t samples, std::uint64_t seed);

/// Monte Carlo volume of the complex trace-nonnegative region: lambda
/// coordinates uniform on [-1,1]^r, each (mu, nu) pair uniform on the closed
/// unit disk via rejection from its bounding square. Only mu enters the
/// trace constraint 1 + sum lambda + 2 sum mu >= 0.
MCEstimate mc_volume_complex(const ComplexRegionParams& params, std::uint64_t samples,
                             std::uint64_t seed);

}  // namespace tnpoly
