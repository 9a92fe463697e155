#include "tnpoly/spectra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tnpoly {

Spectrum::Spectrum(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("Spectrum: must be nonempty");
    }
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

Rational s1(const Spectrum& sigma) {
    Rational sum(0);
    for (const Rational& value : sigma.values()) {
        sum += value;
    }
    return sum;
}

Rational spectral_radius(const Spectrum& sigma) {
    // Sorted nonincreasing: the extremes carry the max modulus.
    const Rational& largest = sigma.values().front();
    const Rational& smallest = sigma.values().back();
    return std::max(abs_rational(largest), abs_rational(smallest));
}

NecessaryReport check_necessary(const Spectrum& sigma) {
    const Rational sr = spectral_radius(sigma);
    const auto& values = sigma.values();
    NecessaryReport report;
    report.perron_ok = std::find(values.begin(), values.end(), sr) != values.end();
    report.trace_ok = s1(sigma) >= 0;
    return report;
}

Spectrum normalize(const Spectrum& sigma) {
    const Rational sr = spectral_radius(sigma);
    if (sr == 0) {
        throw std::invalid_argument("normalize: all-zero spectrum has no Perron root");
    }
    if (!check_necessary(sigma).perron_ok) {
        throw std::invalid_argument(
            "normalize: spectral radius is not a member; scaling would not give lambda_1 = 1");
    }
    std::vector<Rational> scaled;
    scaled.reserve(sigma.size());
    for (const Rational& value : sigma.values()) {
        scaled.push_back(value / sr);
    }
    return Spectrum(std::move(scaled));
}

std::vector<Rational> project(const Spectrum& sigma) {
    if (sigma.values().front() != 1) {
        throw std::invalid_argument("project: spectrum is not normalized");
    }
    return {sigma.values().begin() + 1, sigma.values().end()};
}

bool is_suleimanova(const Spectrum& sigma) {
    const auto& values = sigma.values();
    if (values.front() != 1) {
        return false;
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > 0) {
            return false;  // a second 1 or a value in (0,1)
        }
    }
    return s1(sigma) >= 0;
}

Spectrum gen_odd_nonrealizable(unsigned k) {
    if (k < 2) {
        throw std::invalid_argument("gen_odd_nonrealizable: requires k >= 2");
    }
    std::vector<Rational> values(k, Rational(1));
    values.insert(values.end(), k + 1, Rational(-static_cast<int>(k), k + 1));
    return Spectrum(std::move(values));
}

Spectrum gen_even_nonrealizable(unsigned k) {
    if (k < 2) {
        throw std::invalid_argument("gen_even_nonrealizable: requires k >= 2");
    }
    std::vector<Rational> values(k, Rational(1));
    values.emplace_back(-1, 2 * k + 1);
    values.insert(values.end(), k + 1, Rational(1 - 2 * static_cast<int>(k), 2 * k + 1));
    return Spectrum(std::move(values));
}

Spectrum PartitionCertificate::combined() const {
    std::vector<Rational> all;
    for (const Spectrum& part : parts) {
        all.insert(all.end(), part.values().begin(), part.values().end());
    }
    return Spectrum(std::move(all));
}

const char* to_string(HypothesisViolation violation) {
    switch (violation) {
        case HypothesisViolation::None: return "none";
        case HypothesisViolation::NotNormalized: return "leading value is not 1";
        case HypothesisViolation::SpectralRadiusAbsent:
            return "spectral radius is not a member of the spectrum";
        case HypothesisViolation::ContainsZero: return "contains a zero value";
        case HypothesisViolation::PositiveNonUnit: return "contains a positive value other than 1";
        case HypothesisViolation::NegativeTraceSum: return "trace sum is negative";
    }
    return "unknown";
}

namespace {

// Backtracking over assignments of negatives to at most `group_count` groups.
// Negatives arrive sorted by magnitude descending; `room` holds each group's
// remaining capacity above -1. Groups with equal residual room are
// interchangeable, so only the first of each run is tried.
bool assign_negatives(const std::vector<Rational>& negatives, std::size_t index,
                      std::vector<Rational>& room, std::vector<std::size_t>& assignment) {
    if (index == negatives.size()) {
        return true;
    }
    const Rational magnitude = -negatives[index];
    for (std::size_t g = 0; g < room.size(); ++g) {
        if (g > 0 && room[g] == room[g - 1]) {
            continue;
        }
        if (room[g] < magnitude) {
            continue;
        }
        room[g] -= magnitude;
        assignment[index] = g;
        if (assign_negatives(negatives, index + 1, room, assignment)) {
            return true;
        }
        room[g] += magnitude;
    }
    return false;
}

}  // namespace

DecideResult decide_restricted_realizable(const Spectrum& sigma) {
    DecideResult result;
    const auto& values = sigma.values();

    if (values.front() != 1) {
        result.violation = HypothesisViolation::NotNormalized;
        return result;
    }
    std::size_t ones = 0;
    std::vector<Rational> negatives;
    for (const Rational& value : values) {
        if (value == 1) {
            ++ones;
        } else if (value == 0) {
            result.violation = HypothesisViolation::ContainsZero;
            return result;
        } else if (value > 0) {
            result.violation = HypothesisViolation::PositiveNonUnit;
            return result;
        } else {
            if (value < -1) {
                result.violation = HypothesisViolation::SpectralRadiusAbsent;
                return result;
            }
            negatives.push_back(value);
        }
    }
    if (s1(sigma) < 0) {
        result.violation = HypothesisViolation::NegativeTraceSum;
        return result;
    }

    // The spectrum is sorted nonincreasing, so negatives arrived smallest
    // magnitude first; the search wants the hardest items up front.
    std::reverse(negatives.begin(), negatives.end());
    std::vector<Rational> room(ones, Rational(1));
    std::vector<std::size_t> assignment(negatives.size());
    if (!assign_negatives(negatives, 0, room, assignment)) {
        result.status = DecideStatus::NotRealizable;
        return result;
    }

    std::vector<std::vector<Rational>> groups(ones, std::vector<Rational>{Rational(1)});
    for (std::size_t i = 0; i < negatives.size(); ++i) {
        groups[assignment[i]].push_back(negatives[i]);
    }
    PartitionCertificate certificate;
    certificate.parts.reserve(ones);
    for (auto& group : groups) {
        certificate.parts.emplace_back(std::move(group));
    }
    result.status = DecideStatus::Realizable;
    result.certificate = std::move(certificate);
    return result;
}

NonnegMatrix::NonnegMatrix(std::size_t order, std::vector<Rational> entries)
    : order_(order), entries_(std::move(entries)) {
    if (order_ == 0 || entries_.size() != order_ * order_) {
        throw std::invalid_argument("NonnegMatrix: entry count must be order^2 with order >= 1");
    }
    for (const Rational& entry : entries_) {
        if (entry < 0) {
            throw std::invalid_argument("NonnegMatrix: negative entry");
        }
    }
}

const Rational& NonnegMatrix::at(std::size_t row, std::size_t col) const {
    return entries_.at(row * order_ + col);
}

std::vector<Rational> poly_from_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> coeffs{Rational(1)};
    for (const Rational& root : roots) {
        std::vector<Rational> next(coeffs.size() + 1, Rational(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= root * coeffs[i];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

std::vector<Rational> char_poly(const NonnegMatrix& matrix) {
    const std::size_t n = matrix.order();

    // Clear denominators: run Faddeev-LeVerrier on B = L*A over the integers
    // (every division by the step index is exact), then map coefficient j of
    // char(B) back via a_j = b_j / L^(n-j).
    Int scale = 1;
    for (const Rational& entry : matrix.entries()) {
        scale = boost::multiprecision::lcm(scale, denominator(entry));
    }
    std::vector<Int> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
        const Rational& e = matrix.entries()[i];
        a[i] = numerator(e) * (scale / denominator(e));
    }

    std::vector<Int> m(n * n, Int(0));  // M_0 = 0
    std::vector<Int> coeffs_desc(n + 1);
    coeffs_desc[0] = 1;  // t^n
    Int c = 1;
    for (std::size_t step = 1; step <= n; ++step) {
        // M_k = A * M_{k-1} + c_{k-1} I
        for (std::size_t i = 0; i < n; ++i) {
            m[i * n + i] += c;
        }
        std::vector<Int> prod(n * n, Int(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                const Int& left = a[i * n + l];
                if (left == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    prod[i * n + j] += left * m[l * n + j];
                }
            }
        }
        m = std::move(prod);
        Int trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            trace += m[i * n + i];
        }
        c = -trace / static_cast<long>(step);
        coeffs_desc[step] = c;
    }

    std::vector<Rational> coeffs(n + 1);
    Int power = 1;  // L^(n-j) for j descending from n
    for (std::size_t j = 0; j <= n; ++j) {
        coeffs[n - j] = Rational(coeffs_desc[j], power);
        power *= scale;
    }
    return coeffs;
}

NonnegMatrix companion_realize(const Spectrum& sigma) {
    if (!is_suleimanova(sigma)) {
        throw std::invalid_argument("companion_realize: spectrum is not Suleimanova");
    }
    const std::size_t n = sigma.size();
    const std::vector<Rational> coeffs = poly_from_roots(sigma.values());
    std::vector<Rational> entries(n * n, Rational(0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        entries[i * n + (i + 1)] = 1;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Rational entry = -coeffs[j];
        if (entry < 0) {
            throw std::logic_error(
                "companion_realize: positive non-leading coefficient for a Suleimanova spectrum");
        }
        entries[(n - 1) * n + j] = entry;
    }
    return NonnegMatrix(n, std::move(entries));
}

NonnegMatrix realize_union(const PartitionCertificate& certificate) {
    if (certificate.parts.empty()) {
        throw std::invalid_argument("realize_union: certificate has no parts");
    }
    std::size_t total = 0;
    for (const Spectrum& part : certificate.parts) {
        total += part.size();
    }
    std::vector<Rational> entries(total * total, Rational(0));
    std::size_t offset = 0;
    for (const Spectrum& part : certificate.parts) {
        const NonnegMatrix block = companion_realize(part);
        const std::size_t m = block.order();
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                entries[(offset + i) * total + (offset + j)] = block.at(i, j);
            }
        }
        offset += m;
    }
    return NonnegMatrix(total, std::move(entries));
}

bool verify_realization(const NonnegMatrix& matrix, const Spectrum& sigma) {
    if (matrix.order() != sigma.size()) {
        throw std::invalid_argument("verify_realization: matrix order differs from |sigma|");
    }
    return char_poly(matrix) == poly_from_roots(sigma.values());
}

}  // namespace tnpoly
