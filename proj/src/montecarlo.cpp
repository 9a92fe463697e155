#include "tnpoly/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

namespace tnpoly {

namespace {

constexpr std::int64_t kHalfRange = INT64_C(1) << 52;  // v = 2^52 maps to coordinate 0

MCEstimate finish_estimate(double ambient, std::uint64_t hits, std::uint64_t samples,
                           std::uint64_t seed) {
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    MCEstimate est;
    est.mean = ambient * p;
    est.std_error = ambient * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    est.samples = samples;
    est.seed = seed;
    est.generator = kGeneratorName;
    return est;
}

}  // namespace

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * UINT64_C(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
    return z ^ (z >> 31);
}

std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block) {
    return std::mt19937_64(splitmix64_at(seed, block));
}

MCEstimate mc_volume(unsigned n, std::uint64_t samples, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("mc_volume: n must be >= 1");
    }
    if (samples == 0) {
        throw std::invalid_argument("mc_volume: samples must be >= 1");
    }
    std::uint64_t hits = 0;
    std::uint64_t done = 0;
    for (std::uint64_t block = 0; done < samples; ++block) {
        auto engine = block_engine(seed, block);
        const std::uint64_t in_block = std::min<std::uint64_t>(kMcBlockSize, samples - done);
        for (std::uint64_t i = 0; i < in_block; ++i) {
            // 1 + sum coords >= 0  <=>  sum (v_j - 2^52) >= -2^52, exact in int64
            std::int64_t offset_sum = 0;
            for (unsigned j = 0; j < n; ++j) {
                offset_sum += static_cast<std::int64_t>(draw53(engine)) - kHalfRange;
            }
            if (offset_sum >= -kHalfRange) {
                ++hits;
            }
        }
        done += in_block;
    }
    return finish_estimate(to_double(pow_rational(Rational(2), n)), hits, samples, seed);
}

MCEstimate mc_volume_complex(const ComplexRegionParams& params, std::uint64_t samples,
                             std::uint64_t seed) {
    if (samples == 0) {
        throw std::invalid_argument("mc_volume_complex: samples must be >= 1");
    }
    const unsigned r = params.real_count;
    const unsigned c = params.pair_count;
    std::uint64_t hits = 0;
    std::uint64_t done = 0;
    for (std::uint64_t block = 0; done < samples; ++block) {
        auto engine = block_engine(seed, block);
        const std::uint64_t in_block = std::min<std::uint64_t>(kMcBlockSize, samples - done);
        for (std::uint64_t i = 0; i < in_block; ++i) {
            std::int64_t offset_sum = 0;  // tracks 1 + sum lambda + 2 sum mu, shifted by 2^52
            for (unsigned j = 0; j < r; ++j) {
                offset_sum += static_cast<std::int64_t>(draw53(engine)) - kHalfRange;
            }
            for (unsigned j = 0; j < c; ++j) {
                // closed-disk rejection from [-1,1)^2, exact in integers
                std::int64_t mu_offset;
                for (;;) {
                    const std::int64_t dx = static_cast<std::int64_t>(draw53(engine)) - kHalfRange;
                    const std::int64_t dy = static_cast<std::int64_t>(draw53(engine)) - kHalfRange;
                    const unsigned __int128 rad2 =
                        static_cast<unsigned __int128>(static_cast<__int128>(dx) * dx) +
                        static_cast<unsigned __int128>(static_cast<__int128>(dy) * dy);
                    if (rad2 <= static_cast<unsigned __int128>(1) << 104) {
                        mu_offset = dx;  // nu (dy) never enters the constraint
                        break;
                    }
                }
                offset_sum += 2 * mu_offset;
            }
            if (offset_sum >= -kHalfRange) {
                ++hits;
            }
        }
        done += in_block;
    }
    return finish_estimate(ambient_volume(params).value(), hits, samples, seed);
}

}  // namespace tnpoly
