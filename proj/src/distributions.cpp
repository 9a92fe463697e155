#include "tnpoly/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace tnpoly {

IrwinHallParams::IrwinHallParams(unsigned n_in) : n(n_in) {
    if (n == 0) {
        throw std::invalid_argument("IrwinHallParams: n must be >= 1");
    }
}

UniformSumParams::UniformSumParams(unsigned n_in, Rational a_in, Rational b_in)
    : n(n_in), a(std::move(a_in)), b(std::move(b_in)) {
    if (n == 0) {
        throw std::invalid_argument("UniformSumParams: n must be >= 1");
    }
    if (a >= b) {
        throw std::invalid_argument("UniformSumParams: requires a < b");
    }
}

namespace {

// Upper index of the alternating sum: min(floor(x), n). x is known to be >= 0.
unsigned sum_terms(const Rational& x, unsigned n) {
    const Int fl = floor_rational(x);
    if (fl >= n) {
        return n;
    }
    return fl.convert_to<unsigned>();
}

}  // namespace

Rational ih_pdf(const IrwinHallParams& params, const Rational& x) {
    const unsigned n = params.n;
    if (x < 0 || x > n) {
        return Rational(0);
    }
    const unsigned jmax = sum_terms(x, n);
    Rational sum(0);
    for (unsigned k = 0; k <= jmax; ++k) {
        const Rational term = binomial(n, k) * pow_rational(x - k, n - 1);
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum / factorial(n - 1);
}

Rational ih_cdf(const IrwinHallParams& params, const Rational& x) {
    const unsigned n = params.n;
    if (x <= 0) {
        return Rational(0);
    }
    if (x >= n) {
        return Rational(1);
    }
    const unsigned jmax = sum_terms(x, n);
    Rational sum(0);
    for (unsigned k = 0; k <= jmax; ++k) {
        const Rational term = binomial(n, k) * pow_rational(x - k, n);
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Rational value = sum / factorial(n);
    // Guard clamp; exact arithmetic never trips it strictly inside the support.
    if (value < 0 || value > 1) {
        throw std::logic_error("ih_cdf: exact value escaped [0,1] inside the support");
    }
    return value;
}

Rational us_transform(const UniformSumParams& params, const Rational& x) {
    return params.width() * x + Rational(params.n) * params.a;
}

Rational us_transform_inverse(const UniformSumParams& params, const Rational& x) {
    return (x - Rational(params.n) * params.a) / params.width();
}

Rational us_pdf(const UniformSumParams& params, const Rational& x) {
    const Rational lo = Rational(params.n) * params.a;
    const Rational hi = Rational(params.n) * params.b;
    if (x < lo || x > hi) {
        return Rational(0);
    }
    return ih_pdf(IrwinHallParams(params.n), us_transform_inverse(params, x)) / params.width();
}

Rational us_cdf(const UniformSumParams& params, const Rational& x) {
    return ih_cdf(IrwinHallParams(params.n), us_transform_inverse(params, x));
}

namespace {

// Neumaier-compensated sum of the alternating series. Terms are evaluated at
// min(y, n - y) via the distribution's symmetry, which keeps the cancellation
// within the documented kFloatPathMaxN envelope.
long double alternating_sum(unsigned n, long double y, unsigned exponent) {
    const unsigned jmax = y >= n ? n : static_cast<unsigned>(std::floor(static_cast<double>(y)));
    long double sum = 0.0L;
    long double comp = 0.0L;
    for (unsigned k = 0; k <= jmax; ++k) {
        const long double coeff = binomial(n, k).convert_to<long double>();
        long double term = coeff * std::pow(y - static_cast<long double>(k),
                                            static_cast<long double>(exponent));
        if (k % 2 == 1) {
            term = -term;
        }
        const long double t = sum + term;
        if (std::fabs(sum) >= std::fabs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

long double factorial_ld(unsigned n) {
    long double f = 1.0L;
    for (unsigned i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

}  // namespace

double us_pdf_float(const UniformSumParams& params, double x) {
    const unsigned n = params.n;
    const double a = to_double(params.a);
    const double width = to_double(params.width());
    long double y = (static_cast<long double>(x) - static_cast<long double>(n) * a) / width;
    if (y < 0.0L || y > static_cast<long double>(n)) {
        return 0.0;
    }
    if (y > static_cast<long double>(n) / 2.0L) {
        y = static_cast<long double>(n) - y;  // f(y) = f(n - y)
    }
    const long double sum = alternating_sum(n, y, n - 1);
    return static_cast<double>(sum / factorial_ld(n - 1) / width);
}

double us_cdf_float(const UniformSumParams& params, double x) {
    const unsigned n = params.n;
    const double a = to_double(params.a);
    const double width = to_double(params.width());
    const long double y = (static_cast<long double>(x) - static_cast<long double>(n) * a) / width;
    if (y <= 0.0L) {
        return 0.0;
    }
    if (y >= static_cast<long double>(n)) {
        return 1.0;
    }
    long double value;
    if (y > static_cast<long double>(n) / 2.0L) {
        value = 1.0L - alternating_sum(n, static_cast<long double>(n) - y, n) / factorial_ld(n);
    } else {
        value = alternating_sum(n, y, n) / factorial_ld(n);
    }
    if (value < 0.0L) {
        value = 0.0L;
    }
    if (value > 1.0L) {
        value = 1.0L;
    }
    return static_cast<double>(value);
}

}  // namespace tnpoly
