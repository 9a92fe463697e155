// Shared helpers for the test suites: an exact piecewise-polynomial oracle
// for the Irwin-Hall density, a naive set-partition oracle for the
// realizability decider, deterministic random-instance generators, and a
// Kolmogorov-Smirnov distance. Everything here stays independent of the
// library code paths it is used to check.
#pragma once

#include "tnpoly/rational.hpp"
#include "tnpoly/spectra.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace tnpoly::testing {

// --- exact polynomials, ascending coefficients ----------------------------

using Poly = std::vector<Rational>;

inline Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

inline Poly poly_antiderivative(const Poly& p) {
    Poly out(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] = p[i] / Rational(static_cast<unsigned>(i) + 1);
    }
    return out;
}

// Monomial expansion of the Irwin-Hall density piece on [j, j+1), built from
// the binomial theorem rather than the library's point evaluation:
//   (1/(n-1)!) sum_{k<=j} (-1)^k C(n,k) sum_i C(n-1,i) y^i (-k)^(n-1-i).
inline Poly ih_density_piece(unsigned n, unsigned j) {
    Poly coeffs(n, Rational(0));
    for (unsigned k = 0; k <= j; ++k) {
        const Int outer = binomial(n, k);
        for (unsigned i = 0; i < n; ++i) {
            Rational term = outer * binomial(n - 1, i) *
                            pow_rational(Rational(-static_cast<int>(k)), n - 1 - i);
            if (k % 2 == 1) {
                term = -term;
            }
            coeffs[i] += term;
        }
    }
    const Rational scale = Rational(1) / factorial(n - 1);
    for (Rational& c : coeffs) {
        c *= scale;
    }
    return coeffs;
}

// Exact integral of the Irwin-Hall density over [y1, y2], summed piece by
// piece through the antiderivatives of the expanded polynomials.
inline Rational integrate_ih_density(unsigned n, Rational y1, Rational y2) {
    y1 = std::max(y1, Rational(0));
    y2 = std::min(y2, Rational(n));
    Rational total(0);
    for (unsigned j = 0; j < n; ++j) {
        const Rational lo = std::max(y1, Rational(j));
        const Rational hi = std::min(y2, Rational(j + 1));
        if (lo < hi) {
            const Poly anti = poly_antiderivative(ih_density_piece(n, j));
            total += poly_eval(anti, hi) - poly_eval(anti, lo);
        }
    }
    return total;
}

// --- naive partition oracle ------------------------------------------------

// Enumerates every set partition of the negatives into at most `groups`
// blocks (restricted growth strings) and checks each one completely; no
// pruning beyond the block count. Exact via int64 after clearing
// denominators.
inline bool naive_partition_feasible(const std::vector<Rational>& negatives, unsigned groups) {
    if (negatives.empty()) {
        return true;
    }
    Int lcm_den = 1;
    for (const Rational& v : negatives) {
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v));
    }
    std::vector<std::int64_t> scaled;
    scaled.reserve(negatives.size());
    for (const Rational& v : negatives) {
        scaled.push_back(
            (numerator(v) * (lcm_den / denominator(v))).convert_to<std::int64_t>());
    }
    const std::int64_t capacity = -lcm_den.convert_to<std::int64_t>();

    const std::size_t m = scaled.size();
    std::vector<unsigned> label(m, 0);
    std::vector<std::int64_t> sums(groups, 0);

    std::function<bool(std::size_t, unsigned)> walk = [&](std::size_t i, unsigned used) -> bool {
        if (i == m) {
            for (unsigned g = 0; g < used; ++g) {
                if (sums[g] < capacity) {
                    return false;
                }
            }
            return true;
        }
        const unsigned limit = std::min<unsigned>(used + 1, groups);
        for (unsigned g = 0; g < limit; ++g) {
            label[i] = g;
            sums[g] += scaled[i];
            if (walk(i + 1, std::max(used, g + 1))) {
                return true;
            }
            sums[g] -= scaled[i];
        }
        return false;
    };
    return walk(0, 0);
}

// --- deterministic random instances ----------------------------------------

inline double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform-ish rational in (0, 1]: p/q with 1 <= p <= q <= max_den.
inline Rational random_unit_rational(std::mt19937_64& rng, unsigned max_den) {
    const unsigned q = 1 + static_cast<unsigned>(rng() % max_den);
    const unsigned p = 1 + static_cast<unsigned>(rng() % q);
    return Rational(p, q);
}

// Random Suleimanova spectrum: a leading 1 plus negatives whose magnitudes
// sum to a target in [0, 1]; boundary (sum exactly 1) hit often, zeros
// occasionally.
inline Spectrum random_suleimanova(std::mt19937_64& rng, unsigned max_size) {
    const unsigned size = 1 + static_cast<unsigned>(rng() % max_size);
    std::vector<Rational> values{Rational(1)};
    if (size == 1) {
        return Spectrum(std::move(values));
    }
    std::vector<Rational> magnitudes;
    Rational total(0);
    for (unsigned i = 0; i + 1 < size; ++i) {
        magnitudes.push_back(random_unit_rational(rng, 8));
        total += magnitudes.back();
    }
    const Rational target = rng() % 4 == 0 ? Rational(1) : random_unit_rational(rng, 16);
    const Rational factor = target / total;
    for (Rational& mag : magnitudes) {
        mag *= factor;
        if (rng() % 8 == 0) {
            mag = 0;
        }
        values.push_back(-mag);
    }
    return Spectrum(std::move(values));
}

// Random spectrum inside the restricted-class hypothesis: k copies of 1,
// everything else strictly negative in [-1, 0), s1 >= 0. Three shapes:
// known-realizable unions of exact bin fills, trace-zero rescalings with an
// open verdict, and interior instances.
inline Spectrum random_restricted(std::mt19937_64& rng, unsigned max_ones, unsigned max_negatives) {
    const unsigned k = 1 + static_cast<unsigned>(rng() % max_ones);
    std::vector<Rational> values(k, Rational(1));
    switch (rng() % 3) {
        case 0: {
            // Realizable by construction: each 1 gets segments of [0,1]
            // summing exactly to 1.
            unsigned left = max_negatives;
            for (unsigned bin = 0; bin < k; ++bin) {
                const unsigned budget = left - (k - 1 - bin);  // keep one slot per later bin
                const unsigned parts = 1 + static_cast<unsigned>(rng() % std::min(3u, budget));
                left -= parts;
                std::vector<unsigned> cuts{0, 24};
                while (cuts.size() < parts + 1) {
                    const unsigned c = 1 + static_cast<unsigned>(rng() % 23);
                    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) {
                        cuts.push_back(c);
                    }
                }
                std::sort(cuts.begin(), cuts.end());
                for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
                    values.emplace_back(-Rational(cuts[i + 1] - cuts[i], 24));
                }
            }
            break;
        }
        case 1: {
            // Trace-zero rescaling: negatives scaled so s1 == 0 exactly.
            const unsigned m = 1 + static_cast<unsigned>(rng() % max_negatives);
            std::vector<Rational> magnitudes;
            Rational total(0);
            for (unsigned i = 0; i < m; ++i) {
                magnitudes.push_back(random_unit_rational(rng, 10));
                total += magnitudes.back();
            }
            const Rational factor = total > k ? Rational(k) / total : Rational(1);
            for (const Rational& mag : magnitudes) {
                values.push_back(-mag * factor);
            }
            break;
        }
        default: {
            // Interior: keep magnitudes small enough that s1 > 0 comfortably.
            const unsigned m = 1 + static_cast<unsigned>(rng() % max_negatives);
            Rational total(0);
            for (unsigned i = 0; i < m; ++i) {
                Rational mag = random_unit_rational(rng, 10);
                if (total + mag > k) {
                    mag /= 16;  // shrink instead of rejecting to keep the count
                }
                if (total + mag > k) {
                    break;
                }
                total += mag;
                values.push_back(-mag);
            }
            if (values.size() == k) {
                values.emplace_back(-1, 4);
            }
            break;
        }
    }
    return Spectrum(std::move(values));
}

// --- Kolmogorov-Smirnov ------------------------------------------------------

// D statistic between a sample (sorted in place) and a reference CDF.
inline double ks_distance(std::vector<double>& samples, const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::max(f - static_cast<double>(i) / n,
                                 static_cast<double>(i + 1) / n - f));
    }
    return d;
}

}  // namespace tnpoly::testing
