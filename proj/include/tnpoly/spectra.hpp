#pragma once

#include "tnpoly/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tnpoly {

/// A finite multiset of exact real eigenvalues, stored sorted nonincreasing.
class Spectrum {
public:
    /// Sorts the values; throws std::invalid_argument on an empty list.
    explicit Spectrum(std::vector<Rational> values);

    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    bool operator==(const Spectrum&) const = default;

private:
    std::vector<Rational> values_;
};

/// Trace sum s1 = sum of all eigenvalues.
Rational s1(const Spectrum& sigma);

/// Spectral radius max |lambda_i|.
Rational spectral_radius(const Spectrum& sigma);

/// The two classical necessary conditions for realizability: the spectral
/// radius must itself appear in the spectrum, and the trace sum must be >= 0.
struct NecessaryReport {
    bool perron_ok = false;
    bool trace_ok = false;
};

NecessaryReport check_necessary(const Spectrum& sigma);

/// Divides by the spectral radius so that lambda_1 = 1. Throws when the
/// spectrum is all zero or the spectral radius is not a member.
Spectrum normalize(const Spectrum& sigma);

/// Drops the leading 1 of a normalized spectrum; the remaining k-1 values are
/// the point x_sigma tested against the trace nonnegative polytope.
std::vector<Rational> project(const Spectrum& sigma);

/// Normalized, trace sum >= 0, and the single leading 1 is the only positive
/// value. Zeros are allowed; a second 1 or any value in (0,1) is not.
bool is_suleimanova(const Spectrum& sigma);

/// Trace-zero non-realizable spectrum of odd order 2k+1:
/// k copies of 1 and k+1 copies of -k/(k+1). Requires k >= 2.
Spectrum gen_odd_nonrealizable(unsigned k);

/// Trace-zero non-realizable spectrum of even order 2(k+1):
/// k copies of 1, one -1/(2k+1), and k+1 copies of (1-2k)/(2k+1).
/// Requires k >= 2.
Spectrum gen_even_nonrealizable(unsigned k);

/// Witness that a spectrum is realizable: a partition into Suleimanova parts.
struct PartitionCertificate {
    std::vector<Spectrum> parts;

    /// Multiset union of the parts.
    Spectrum combined() const;
};

enum class DecideStatus {
    Realizable,
    NotRealizable,
    HypothesisViolated,
};

/// Why the restricted-class characterization does not apply to an input.
enum class HypothesisViolation {
    None,
    NotNormalized,         // leading value != 1
    SpectralRadiusAbsent,  // some |lambda| exceeds 1, so sr is not a member
    ContainsZero,          // non-unit values must be strictly negative
    PositiveNonUnit,       // a positive value in (0,1) or a value above 1
    NegativeTraceSum,      // s1 < 0
};

struct DecideResult {
    DecideStatus status = DecideStatus::HypothesisViolated;
    HypothesisViolation violation = HypothesisViolation::None;
    std::optional<PartitionCertificate> certificate;
};

const char* to_string(HypothesisViolation violation);

/// Decides realizability for the restricted class: normalized spectra whose
/// value 1 has multiplicity k >= 1, all other values strictly negative, and
/// s1 >= 0. Realizable exactly when the negatives split into at most k groups
/// each summing to >= -1; the search is an exact branch-and-bound over
/// assignments of negatives (largest magnitude first) with pruning at partial
/// group sums below -1 and symmetry breaking across groups of equal residual
/// capacity. Inputs outside the hypothesis get HypothesisViolated, never a
/// realizability verdict.
DecideResult decide_restricted_realizable(const Spectrum& sigma);

/// Square matrix with entrywise-nonnegative exact rational entries.
class NonnegMatrix {
public:
    /// Row-major entries; throws on a non-square count or a negative entry.
    NonnegMatrix(std::size_t order, std::vector<Rational> entries);

    std::size_t order() const { return order_; }
    const Rational& at(std::size_t row, std::size_t col) const;
    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const NonnegMatrix&) const = default;

private:
    std::size_t order_;
    std::vector<Rational> entries_;
};

/// Monic polynomial with the given roots, coefficients ascending by degree
/// (Vieta expansion; last coefficient is the leading 1).
std::vector<Rational> poly_from_roots(const std::vector<Rational>& roots);

/// Characteristic polynomial of the matrix, coefficients ascending, computed
/// exactly by integer Faddeev-LeVerrier after clearing denominators. No
/// floating-point eigensolver is involved.
std::vector<Rational> char_poly(const NonnegMatrix& matrix);

/// Bottom-row companion matrix of the characteristic polynomial of a
/// Suleimanova spectrum: ones on the superdiagonal, negated coefficients in
/// the last row. Every entry of the result is nonnegative (all non-leading
/// coefficients of such a polynomial are <= 0); a violation is an internal
/// error, not a user error.
NonnegMatrix companion_realize(const Spectrum& sigma);

/// Block-diagonal direct sum of the parts' companion matrices: a realizing
/// matrix for the union of Suleimanova spectra.
NonnegMatrix realize_union(const PartitionCertificate& certificate);

/// True iff the matrix's exact characteristic polynomial matches the
/// elementary symmetric functions of sigma coefficient by coefficient.
bool verify_realization(const NonnegMatrix& matrix, const Spectrum& sigma);

}  // namespace tnpoly
