#include "tnpoly/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tnpoly {

Int floor_rational(const Rational& r) {
    const Int num = numerator(r);
    const Int den = denominator(r);  // canonical: den > 0
    Int q = num / den;
    if (num % den != 0 && num < 0) {
        --q;
    }
    return q;
}

Rational pow_rational(const Rational& r, unsigned e) {
    if (e == 0) {
        return Rational(1);
    }
    const Int num = boost::multiprecision::pow(numerator(r), e);
    const Int den = boost::multiprecision::pow(denominator(r), e);
    return Rational(num, den);
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) {
        return Int(0);
    }
    if (k > n - k) {
        k = n - k;
    }
    Int result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return result;
}

Int factorial(unsigned n) {
    Int result = 1;
    for (unsigned i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

Rational abs_rational(const Rational& r) {
    return r < 0 ? Rational(-r) : r;
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

std::string format_rational(const Rational& r) {
    const Int den = denominator(r);
    std::string out = numerator(r).str();
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) {
        bad_rational(text);
    }

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        const std::string_view p = s.substr(0, slash);
        const std::string_view q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) {
            bad_rational(text);
        }
        const Int den{std::string(q)};
        if (den == 0) {
            throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        }
        Rational r(Int(std::string(p)), den);
        return negative ? Rational(-r) : r;
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        const std::string_view ip = s.substr(0, dot);
        const std::string_view fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp))) {
            bad_rational(text);
        }
        Int scaled = ip.empty() ? Int(0) : Int(std::string(ip));
        Int den = 1;
        for (char c : fp) {
            scaled = scaled * 10 + (c - '0');
            den *= 10;
        }
        Rational r(scaled, den);
        return negative ? Rational(-r) : r;
    }

    if (!all_digits(s)) {
        bad_rational(text);
    }
    Rational r{Int(std::string(s))};
    return negative ? Rational(-r) : r;
}

}  // namespace tnpoly
