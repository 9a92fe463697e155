#pragma once

#include "tnpoly/rational.hpp"

namespace tnpoly {

/// Sum of n independent U[0,1] variables (Irwin-Hall).
struct IrwinHallParams {
    explicit IrwinHallParams(unsigned n_in);
    unsigned n;
};

/// Sum of n independent U[a,b] variables, an affine image of Irwin-Hall.
/// Requires a < b; a degenerate interval is rejected.
struct UniformSumParams {
    UniformSumParams(unsigned n_in, Rational a_in, Rational b_in);
    unsigned n;
    Rational a;
    Rational b;

    Rational width() const { return b - a; }
};

/// Density of the Irwin-Hall sum, exact. Zero outside [0, n]; at the
/// piecewise-polynomial knots the value is the right-limit piece.
Rational ih_pdf(const IrwinHallParams& params, const Rational& x);

/// CDF of the Irwin-Hall sum, exact. 0 for x <= 0, 1 for x >= n.
Rational ih_cdf(const IrwinHallParams& params, const Rational& x);

/// Affine map from the standard Irwin-Hall variable to the [a,b] sum:
/// h(x) = |b-a| x + n a, and its inverse h^{-1}(x) = (x - n a) / |b-a|.
Rational us_transform(const UniformSumParams& params, const Rational& x);
Rational us_transform_inverse(const UniformSumParams& params, const Rational& x);

/// Density of the sum of n U[a,b] draws, exact. Zero outside [na, nb].
Rational us_pdf(const UniformSumParams& params, const Rational& x);

/// CDF of the sum of n U[a,b] draws, exact.
Rational us_cdf(const UniformSumParams& params, const Rational& x);

/// Largest n for which the floating-point path is guaranteed to agree with
/// the exact path to 1e-9 relative error. Beyond it the alternating sum
/// cancels catastrophically in doubles; use the exact path instead.
inline constexpr unsigned kFloatPathMaxN = 15;

double us_pdf_float(const UniformSumParams& params, double x);
double us_cdf_float(const UniformSumParams& params, double x);

}  // namespace tnpoly
