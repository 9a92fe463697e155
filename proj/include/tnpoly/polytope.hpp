#pragma once

#include "tnpoly/rational.hpp"

#include <span>

namespace tnpoly {

/// The trace nonnegative polytope: points x in [-1,1]^n with 1 + sum x_i >= 0.
/// Membership uses closed inequalities, so the boundary is included.
class TracePolytope {
public:
    explicit TracePolytope(unsigned dimension);

    unsigned dimension() const { return dimension_; }

    /// Throws std::invalid_argument when the point dimension does not match.
    bool contains(std::span<const Rational> point) const;

private:
    unsigned dimension_;
};

/// Exact volume of the n-dimensional trace nonnegative polytope:
///   2^n [1 - (1/n!) sum_{k=0}^{floor((n-1)/2)} (-1)^k C(n,k) ((n-1)/2 - k)^n].
/// Every call cross-checks the equivalent CDF route 2^n (1 - F(-1)) and
/// throws std::logic_error if the two disagree.
Rational exact_volume(unsigned n);

/// Volume of the ambient hypercube [-1,1]^n.
Rational ambient_volume(const TracePolytope& polytope);

/// Ambient space for the complex trace-nonnegative region: the product of a
/// real box [-1,1]^r and c closed unit disks for the conjugate pairs.
struct ComplexRegionParams {
    ComplexRegionParams(unsigned real_count_in, unsigned pair_count_in);
    unsigned real_count;  // r: real eigenvalues excluding the Perron root
    unsigned pair_count;  // c: conjugate pairs
};

/// A volume of the form coefficient * pi^pi_power, kept symbolic until the
/// final float conversion.
struct AmbientVolume {
    Rational coefficient;
    unsigned pi_power;

    double value() const;
};

AmbientVolume ambient_volume(const ComplexRegionParams& params);

}  // namespace tnpoly
