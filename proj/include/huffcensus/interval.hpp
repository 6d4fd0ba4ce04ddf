#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "huffcensus/rational.hpp"

namespace huffcensus {

// Closed interval with exact rational endpoints. Every operation returns an
// interval that contains the exact image set; endpoints are computed without
// rounding (outward dyadic rounding, where used, only ever widens).
struct Interval {
    Rational lo;
    Rational hi;

    Interval() : lo(0), hi(0) {}
    Interval(const Rational& point) : lo(point), hi(point) {}  // NOLINT: implicit by design
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }

    static Interval of_int(long long v) { return Interval(Rational(v)); }

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool is_point() const { return lo == hi; }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }

    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

inline std::pair<Rational, Rational> midpoint_width(const Interval& x) {
    return {x.midpoint(), x.width()};
}

inline Interval operator-(const Interval& x) { return Interval(-x.hi, -x.lo); }

inline Interval operator+(const Interval& x, const Interval& y) {
    return Interval(x.lo + y.lo, x.hi + y.hi);
}

inline Interval operator-(const Interval& x, const Interval& y) {
    return Interval(x.lo - y.hi, x.hi - y.lo);
}

namespace detail {
inline Interval from_candidates(const Rational& a, const Rational& b, const Rational& c,
                                const Rational& d) {
    return Interval(std::min(std::min(a, b), std::min(c, d)),
                    std::max(std::max(a, b), std::max(c, d)));
}
}  // namespace detail

inline Interval operator*(const Interval& x, const Interval& y) {
    return detail::from_candidates(x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi);
}

inline Interval operator/(const Interval& x, const Interval& y) {
    if (y.contains_zero())
        throw std::domain_error("interval division: divisor contains zero");
    return detail::from_candidates(x.lo / y.lo, x.lo / y.hi, x.hi / y.lo, x.hi / y.hi);
}

inline Interval reciprocal(const Interval& y) { return Interval(Rational(1)) / y; }

inline Interval pow_nonneg(const Interval& x, long long k) {
    if (k < 0) throw std::invalid_argument("pow_nonneg: negative exponent");
    if (k == 0) return Interval(Rational(1));
    Rational pl = qpow(x.lo, k), ph = qpow(x.hi, k);
    if (x.lo >= 0) return Interval(pl, ph);
    if (x.hi <= 0) return (k % 2 == 0) ? Interval(ph, pl) : Interval(pl, ph);
    if (k % 2 == 1) return Interval(pl, ph);
    return Interval(Rational(0), std::max(pl, ph));
}

inline Rational mag(const Interval& x) { return std::max(abs(x.lo), abs(x.hi)); }

inline Interval widen(const Interval& x, const Rational& eps) {
    if (eps < 0) throw std::invalid_argument("widen: negative epsilon");
    return Interval(x.lo - eps, x.hi + eps);
}

inline Interval hull(const Interval& x, const Interval& y) {
    return Interval(std::min(x.lo, y.lo), std::max(x.hi, y.hi));
}

// Outward rounding to the 2^-bits grid: contains the input, endpoints stay
// exact rationals with controlled denominators.
inline Interval outward(const Interval& x, unsigned bits) {
    return Interval(round_down_dyadic(x.lo, bits), round_up_dyadic(x.hi, bits));
}

struct interval_too_wide : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decimal string with `digits` fraction digits, valid for every point of x
// (floor semantics: each point lies in [value, value + 10^-digits)).
inline std::string decimal_render(const Interval& x, int digits) {
    if (digits < 1) throw std::invalid_argument("decimal_render: digits must be positive");
    BigInt scale = ipow(10, digits);
    BigInt flo = floor_rat(x.lo * Rational(scale));
    BigInt fhi = floor_rat(x.hi * Rational(scale));
    if (flo != fhi)
        throw interval_too_wide("interval too wide for " + std::to_string(digits) + " digits");
    bool neg = flo < 0;
    BigInt m = neg ? BigInt(-flo) : flo;
    BigInt ip = m / scale;
    std::string frac = BigInt(m % scale).str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    return (neg ? "-" : "") + ip.str() + "." + frac;
}

}  // namespace huffcensus
