#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational scalar and the conversions the rest of
 * the library needs (string parsing, rational square roots, rationalizing
 * real-valued directions).
 */

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "csd/errors.hpp"

namespace csd {

/// Canonical GMP rational: denominator > 0, gcd(num, den) = 1, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

/// Parses "num/den" or a plain integer. Whitespace around the token is ignored.
inline Rational parse_rational(std::string_view text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        throw InputError("empty rational literal");
    }
    std::string token(text.substr(first, last - first + 1));

    auto valid_integer = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };

    auto slash = token.find('/');
    std::string num = token.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : token.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
        throw InputError("malformed rational literal '" + token + "'");
    }
    if (num[0] == '+') num.erase(0, 1);

    Integer n(num, 10);
    Integer dd(den, 10);
    if (dd == 0) {
        throw InputError("zero denominator in rational literal '" + token + "'");
    }
    Rational q(n, dd);
    q.canonicalize();
    return q;
}

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// A power of two 2^-bits as a rational.
inline Rational dyadic(unsigned bits)
{
    Integer den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    return Rational(Integer(1), den);
}

/// Rational r with |r - sqrt(x)| < tol, computed with integer square roots only.
inline Rational approx_sqrt(const Rational& x, const Rational& tol)
{
    if (x < 0) throw InputError("square root of a negative rational");
    if (tol <= 0) throw InputError("non-positive tolerance");
    // Scale N with 1/N <= tol, then floor(sqrt(x * N^2)) / N is within 1/N.
    Integer scale = 1;
    while (Rational(Integer(1), scale) > tol) scale *= 2;
    Rational scaled = x * Rational(scale * scale);
    Integer floor_val = scaled.get_num() / scaled.get_den();
    Integer root;
    mpz_sqrt(root.get_mpz_t(), floor_val.get_mpz_t());
    Rational r(root, scale);
    r.canonicalize();
    return r;
}

/// Rounds a real value to the nearest multiple of tol (tol > 0).
inline Rational rationalize(long double value, const Rational& tol)
{
    if (!std::isfinite(value)) throw InputError("cannot rationalize a non-finite value");
    // value / tol as a long double, rounded to the nearest integer.
    const long double steps = value / static_cast<long double>(tol.get_d());
    Integer k;
    mpz_set_d(k.get_mpz_t(), static_cast<double>(std::llround(steps)));
    if (std::fabs(steps) > 9.0e15L) {
        throw InputError("value too large to rationalize at this tolerance");
    }
    Rational r = Rational(k) * tol;
    r.canonicalize();
    return r;
}

}  // namespace csd
