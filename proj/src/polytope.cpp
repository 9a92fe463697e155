#include "tnpoly/polytope.hpp"

#include "tnpoly/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace tnpoly {

TracePolytope::TracePolytope(unsigned dimension) : dimension_(dimension) {
    if (dimension_ == 0) {
        throw std::invalid_argument("TracePolytope: dimension must be >= 1");
    }
}

bool TracePolytope::contains(std::span<const Rational> point) const {
    if (point.size() != dimension_) {
        throw std::invalid_argument("TracePolytope::contains: point dimension mismatch");
    }
    Rational sum(0);
    for (const Rational& coord : point) {
        if (abs_rational(coord) > 1) {
            return false;
        }
        sum += coord;
    }
    return 1 + sum >= 0;
}

Rational exact_volume(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("exact_volume: n must be >= 1");
    }
    const Rational half_nm1(n - 1, 2);  // (n-1)/2
    const unsigned jmax = (n - 1) / 2;
    Rational sum(0);
    for (unsigned k = 0; k <= jmax; ++k) {
        const Rational term = binomial(n, k) * pow_rational(half_nm1 - k, n);
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    const Rational cube = pow_rational(Rational(2), n);
    const Rational volume = cube * (1 - sum / factorial(n));

    const UniformSumParams params(n, Rational(-1), Rational(1));
    const Rational via_cdf = cube * (1 - us_cdf(params, Rational(-1)));
    if (volume != via_cdf) {
        throw std::logic_error("exact_volume: closed form disagrees with the CDF route");
    }
    return volume;
}

Rational ambient_volume(const TracePolytope& polytope) {
    return pow_rational(Rational(2), polytope.dimension());
}

ComplexRegionParams::ComplexRegionParams(unsigned real_count_in, unsigned pair_count_in)
    : real_count(real_count_in), pair_count(pair_count_in) {
    if (real_count == 0 && pair_count == 0) {
        throw std::invalid_argument("ComplexRegionParams: requires r + c >= 1");
    }
}

double AmbientVolume::value() const {
    return to_double(coefficient) * std::pow(M_PI, static_cast<double>(pi_power));
}

AmbientVolume ambient_volume(const ComplexRegionParams& params) {
    return AmbientVolume{pow_rational(Rational(2), params.real_count), params.pair_count};
}

}  // namespace tnpoly
