#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "huffcensus/interval.hpp"

using namespace huffcensus;

namespace {
Interval iv(long long a, long long b, long long num = 1, long long den = 1) {
    return Interval(Rational(a * num, den), Rational(b * num, den));
}
}  // namespace

TEST_CASE("interval add/sub/mul endpoints") {
    CHECK(Interval(Rational(1), Rational(2)) + Interval(Rational(3), Rational(4)) ==
          Interval(Rational(4), Rational(6)));
    CHECK(Interval(Rational(-1), Rational(1)) * Interval(Rational(-1), Rational(1)) ==
          Interval(Rational(-1), Rational(1)));
    CHECK(iv(1, 2) - iv(3, 4) == iv(-3, -1));
    CHECK(iv(-2, 3) * iv(-5, 1) == iv(-15, 10));
}

TEST_CASE("interval pow by nonnegative integer") {
    Interval x(Rational(1, 2), Rational(9, 16));
    Interval p = pow_nonneg(x, 3);
    CHECK(p.lo == Rational(1, 8));
    CHECK(p.hi == Rational(729, 4096));
    CHECK(pow_nonneg(iv(-3, 2), 2) == iv(0, 9));
    CHECK(pow_nonneg(iv(-3, 2), 3) == iv(-27, 8));
    CHECK(pow_nonneg(iv(-3, -2), 2) == iv(4, 9));
    CHECK(pow_nonneg(iv(5, 7), 0) == iv(1, 1));
}

TEST_CASE("interval division") {
    Interval x(Rational(1), Rational(2));
    Interval y(Rational(4), Rational(8));
    Interval q = x / y;
    CHECK(q.lo == Rational(1, 8));
    CHECK(q.hi == Rational(1, 2));
    CHECK_THROWS_AS(x / Interval(Rational(-1), Rational(1)), std::domain_error);
    CHECK(reciprocal(iv(-4, -2)) == Interval(Rational(-1, 2), Rational(-1, 4)));
}

TEST_CASE("midpoint and width") {
    auto [m, w] = midpoint_width(Interval(Rational(0), Rational(1)));
    CHECK(m == Rational(1, 2));
    CHECK(w == Rational(1));
    auto [m2, w2] = midpoint_width(Interval(Rational(1, 3)));
    CHECK(m2 == Rational(1, 3));
    CHECK(w2 == Rational(0));
    auto [m3, w3] = midpoint_width(Interval(Rational(1, 2), Rational(5, 8)));
    CHECK(m3 == Rational(9, 16));
    CHECK(w3 == Rational(1, 8));
}

TEST_CASE("decimal render") {
    CHECK(decimal_render(Interval(Rational(141, 1000), Rational(142, 1000)), 1) == "0.1");
    CHECK(decimal_render(Interval(Rational(1, 3)), 4) == "0.3333");
    CHECK(decimal_render(Interval(Rational(-1, 20), Rational(-1, 25)), 1) == "-0.1");
}

TEST_CASE("decimal render rejects wide intervals") {
    CHECK_THROWS_AS(decimal_render(Interval(Rational(1, 10), Rational(2, 10)), 2),
                    interval_too_wide);
    CHECK_THROWS_AS(decimal_render(Interval(Rational(0)), 0), std::invalid_argument);
}

TEST_CASE("render/parse property: reparsed window contains the midpoint") {
    std::mt19937_64 rng(20260810);
    for (int i = 0; i < 500; ++i) {
        long long num = static_cast<long long>(rng() % 2000000) - 1000000;
        long long den = 1 + static_cast<long long>(rng() % 999);
        long long w_num = static_cast<long long>(rng() % 100);
        Rational lo(num, den);
        Interval x(lo, lo + Rational(w_num, 100000));
        int digits = 1 + static_cast<int>(rng() % 6);
        try {
            std::string s = decimal_render(x, digits);
            Rational v = rational_from_decimal(s);
            Interval window(v, v + Rational(BigInt(1), ipow(10, digits)));
            CHECK(window.contains(x.midpoint()));
        } catch (const interval_too_wide&) {
            // fine: the digits were not determined by the interval
        }
    }
}

TEST_CASE("inclusion monotonicity property") {
    std::mt19937_64 rng(42);
    auto rand_rat = [&] { return Rational(static_cast<long long>(rng() % 4001) - 2000, 1 + static_cast<long long>(rng() % 64)); };
    auto rand_iv = [&] {
        Rational a = rand_rat(), b = rand_rat();
        return a <= b ? Interval(a, b) : Interval(b, a);
    };
    auto rand_super = [&](const Interval& x) {
        return Interval(x.lo - abs(rand_rat()), x.hi + abs(rand_rat()));
    };
    for (int i = 0; i < 400; ++i) {
        Interval x = rand_iv(), y = rand_iv();
        Interval xs = rand_super(x), ys = rand_super(y);
        CHECK((xs + ys).contains(x + y));
        CHECK((xs - ys).contains(x - y));
        CHECK((xs * ys).contains(x * y));
        long long k = static_cast<long long>(rng() % 6);
        CHECK(pow_nonneg(xs, k).contains(pow_nonneg(x, k)));
        if (!ys.contains_zero()) CHECK((xs / ys).contains(x / y));
        CHECK(outward(xs, 16).contains(xs));
    }
}

TEST_CASE("outward rounding produces dyadic superset") {
    Interval x(Rational(1, 3), Rational(2, 3));
    Interval o = outward(x, 8);
    CHECK(o.contains(x));
    CHECK(denominator(o.lo) <= 256);
    CHECK(denominator(o.hi) <= 256);
}

TEST_CASE("pow bounds bracket exact powers") {
    Rational r(56, 100);
    for (long long e : {1LL, 7LL, 63LL, 500LL}) {
        Rational lo = pow_lower(r, e, 96), hi = pow_upper(r, e, 96);
        Rational exact = qpow(r, e);
        CHECK(lo <= exact);
        CHECK(exact <= hi);
        CHECK(hi - lo <= Rational(BigInt(1), ipow(2, 64)));
    }
}
