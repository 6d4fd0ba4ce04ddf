#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace huffcensus {

// Exact scalar types used throughout. Counts are nonnegative by convention
// (checked where they are produced); rationals are kept normalized with a
// positive denominator by cpp_rational itself.
using BigInt   = boost::multiprecision::cpp_int;
using BigCount = BigInt;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(BigInt base, long long e) {
    if (e < 0) throw std::invalid_argument("ipow: negative exponent");
    BigInt acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

inline Rational qpow(const Rational& q, long long e) {
    if (e < 0) throw std::invalid_argument("qpow: negative exponent");
    if (e == 0) return Rational(1);
    return Rational(ipow(numerator(q), e), ipow(denominator(q), e));
}

// den must be positive.
inline BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

inline BigInt floor_rat(const Rational& x) {
    return floor_div(numerator(x), denominator(x));
}

inline BigInt ceil_rat(const Rational& x) { return -floor_rat(-x); }

// Largest multiple of 2^-bits that is <= x (resp. smallest >= x). Keeping
// denominators dyadic is what makes repeated exponentiation tractable.
inline Rational round_down_dyadic(const Rational& x, unsigned bits) {
    BigInt scale = BigInt(1) << bits;
    return Rational(floor_rat(x * Rational(scale)), scale);
}

inline Rational round_up_dyadic(const Rational& x, unsigned bits) {
    BigInt scale = BigInt(1) << bits;
    return Rational(ceil_rat(x * Rational(scale)), scale);
}

// Dyadic upper/lower bounds on r^e for r >= 0, via squaring with directed
// rounding after every step. Cost grows with log(e), not with e.
inline Rational pow_upper(Rational r, long long e, unsigned bits) {
    if (r < 0) throw std::invalid_argument("pow_upper: negative base");
    if (e < 0) throw std::invalid_argument("pow_upper: negative exponent");
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc = round_up_dyadic(acc * r, bits);
        e >>= 1;
        if (e) r = round_up_dyadic(r * r, bits);
    }
    return acc;
}

inline Rational pow_lower(Rational r, long long e, unsigned bits) {
    if (r < 0) throw std::invalid_argument("pow_lower: negative base");
    if (e < 0) throw std::invalid_argument("pow_lower: negative exponent");
    Rational acc(1);
    while (e > 0) {
        if (e & 1) {
            acc = round_down_dyadic(acc * r, bits);
            if (acc < 0) acc = 0;
        }
        e >>= 1;
        if (e) {
            r = round_down_dyadic(r * r, bits);
            if (r < 0) r = 0;
        }
    }
    return acc;
}

// Parses decimal literals such as "1.123", "-0.5", "36.6" into exact values.
inline Rational rational_from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rational_from_decimal: empty string");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        i = 1;
    }
    BigInt digits = 0;
    long long frac_digits = -1;
    bool any = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (frac_digits >= 0) throw std::invalid_argument("rational_from_decimal: two dots");
            frac_digits = 0;
        } else if (c >= '0' && c <= '9') {
            digits = digits * 10 + (c - '0');
            if (frac_digits >= 0) ++frac_digits;
            any = true;
        } else {
            throw std::invalid_argument("rational_from_decimal: bad character");
        }
    }
    if (!any) throw std::invalid_argument("rational_from_decimal: no digits");
    Rational r(digits, ipow(10, frac_digits < 0 ? 0 : frac_digits));
    return neg ? -r : r;
}

// "p/q" or plain integer.
inline Rational rational_from_fraction(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    BigInt num{std::string(s.substr(0, slash))};
    BigInt den{std::string(s.substr(slash + 1))};
    if (den <= 0) throw std::invalid_argument("rational_from_fraction: nonpositive denominator");
    return Rational(num, den);
}

inline std::string to_fraction_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace huffcensus
