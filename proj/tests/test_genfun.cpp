#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "huffcensus/counting.hpp"
#include "huffcensus/genfun.hpp"

using namespace huffcensus;

TEST_CASE("bracket values") {
    CHECK(bracket(2, 0) == 0);
    CHECK(bracket(5, 0) == 0);
    CHECK(bracket(2, 3) == 7);
    CHECK(bracket(3, 2) == 4);
    CHECK(bracket(2, 1) == 1);
    CHECK(bracket(10, 5) == 11111);
    CHECK_THROWS_AS(bracket(40, 20), std::overflow_error);
}

TEST_CASE("eval_ND at hand-checked points") {
    // derived by expanding D_3 = 1 - f_1 + f_1 f_2 and differentiating
    NDEval at_zero = eval_ND(2, Rational(0), 4);
    CHECK(at_zero.N == 1);
    CHECK(at_zero.D == 1);
    CHECK(at_zero.Dp == -1);
    NDEval at_zero5 = eval_ND(5, Rational(0), 3);
    CHECK(at_zero5.Dp == -1);

    NDEval h = eval_ND(2, Rational(1, 2), 3);
    CHECK(h.D == Rational(1, 7));
    CHECK(h.N == Rational(29, 56));
    CHECK(h.Dp == Rational(-120, 49));

    CHECK_THROWS_AS(eval_ND(2, Rational(1), 3), std::domain_error);
    CHECK_THROWS_AS(eval_ND(3, Rational(-1), 3), std::domain_error);  // root of q^[2] = 1
}

TEST_CASE("tail bounds: exact value, precondition, monotonicity") {
    TailBound tb = tail_bounds(2, Rational(1, 2), 3);
    CHECK(tb.bound_D == Rational(32767, 29128974));
    CHECK(tb.bound_N == tb.bound_D * Rational(BigInt(1), 128));
    CHECK_THROWS_AS(tail_bounds(2, Rational(9, 10), 0), std::domain_error);

    TailBound tb3 = tail_bounds(3, Rational(1, 2), 3);
    CHECK(tb3.bound_D < tb.bound_D);  // decreasing in t
    TailBound wider = tail_bounds(2, Rational(6, 10), 3);
    CHECK(wider.bound_D > tb.bound_D);  // increasing in radius

    auto up = detail::tail_D_upper(2, Rational(1, 2), 3, 128);
    REQUIRE(up.has_value());
    CHECK(*up >= tb.bound_D);
    CHECK(*up <= tb.bound_D * Rational(11, 10));
}

TEST_CASE("successive partial sums stay within the tail bound") {
    for (int t : {2, 3}) {
        for (Rational q : {Rational(1, 2), Rational(3, 8), Rational(7, 10)}) {
            for (int K = 3; K <= 5; ++K) {
                TailBound tb = tail_bounds(t, q, K);
                for (int Kp = K + 1; Kp <= K + 3; ++Kp) {
                    Rational diff = abs(eval_D(t, q, Kp) - eval_D(t, q, K));
                    REQUIRE(diff <= tb.bound_D);
                    Rational diffN = abs(eval_ND(t, q, Kp).N - eval_ND(t, q, K).N);
                    REQUIRE(diffN <= tb.bound_N);
                }
            }
        }
    }
}

TEST_CASE("certified D evaluation") {
    Interval zero(Rational(0));
    Interval d0 = eval_D_certified(2, zero, 20);
    CHECK(d0.lo == 1);
    CHECK(d0.hi == 1);

    Interval q(Rational(1, 2));
    Rational prev_width(1);
    for (int digits : {10, 20, 30}) {
        Interval d = eval_D_certified(2, q, digits);
        CHECK_FALSE(d.contains(Rational(1, 7)));  // converged past D_3
        CHECK(d.width() <= Rational(BigInt(1), ipow(10, digits)));
        CHECK(d.width() < prev_width);  // shrinking with the digits target
        // deep partial sums approximate the true D(1/2): all must fall inside
        for (int K = 6; K <= 9; ++K) CHECK(d.contains(eval_D(2, Rational(1, 2), K)));
        prev_width = d.width();
    }

    // derivative + numerator enclosures against exact partial sums
    NDCertified nd = eval_ND_certified(2, Interval(Rational(1, 2)), 15);
    NDEval deep = eval_ND(2, Rational(1, 2), 9);
    CHECK(nd.N.contains(deep.N));
    CHECK(nd.D.contains(deep.D));
    CHECK(nd.Dp.contains(deep.Dp));
    CHECK(nd.Dp.width() <= Rational(BigInt(1), ipow(10, 15)));
}

TEST_CASE("certified sign of D") {
    CHECK(certified_sign_D(2, Rational(1, 2)) == 1);
    CHECK(certified_sign_D(2, Rational(6, 10)) == -1);   // between the poles
    CHECK(certified_sign_D(2, Rational(85, 100)) == 1);  // past the second pole
    CHECK(certified_sign_D(15, Rational(1, 2)) == 1);    // D(1/2) = 2^-(t+1) scale
}

TEST_CASE("series_F matches the reference sequences") {
    SeriesTruncation s2 = series_F(2, 6);
    std::vector<BigCount> expect2{1, 1, 1, 2, 3, 5, 9};
    CHECK(s2.coeffs == expect2);
    SeriesTruncation s3 = series_F(3, 5);
    std::vector<BigCount> expect3{1, 1, 1, 2, 4, 7};
    CHECK(s3.coeffs == expect3);
    CHECK(series_F(7, 0).coeffs == std::vector<BigCount>{1});
}

TEST_CASE("series_F coefficients equal the counting DP up to order 20") {
    for (int t = 2; t <= 6; ++t) {
        SeriesTruncation s = series_F(t, 20);
        auto row = count_trees_row(t, 20);
        REQUIRE(s.coeffs == row);
    }
}

TEST_CASE("bivariate recursion basics") {
    BivariateTruncation bt = bivariate_G(2, 6);
    CHECK(bt.G[0][0][1] == 1);  // G_0 = u
    // G_1 = q u^2
    CHECK(bt.G[1][1][2] == 1);
    BigInt total1 = 0;
    for (const auto& row : bt.G[1])
        for (const auto& c : row) total1 += abs(c);
    CHECK(total1 == 1);
    // G_2 = q^2 u^2 + q^3 u^4 (one branching of the star's two deep leaves,
    // or both)
    CHECK(bt.G[2][2][2] == 1);
    CHECK(bt.G[2][3][4] == 1);
    BigInt total2 = 0;
    for (const auto& row : bt.G[2])
        for (const auto& c : row) total2 += abs(c);
    CHECK(total2 == 2);
}

TEST_CASE("bivariate q-valuation and agreement with series_F") {
    for (int t : {2, 3, 4}) {
        int N = 10;
        BivariateTruncation bt = bivariate_G(t, N);
        for (int k = 0; k <= N; ++k) {
            auto at1 = bt.G_at_u1(k);
            for (int n = 0; n < k; ++n) REQUIRE(at1[static_cast<std::size_t>(n)] == 0);
        }
        SeriesTruncation s = series_F(t, N);
        for (int n = 0; n <= N; ++n) {
            BigInt sum = 0;
            for (int k = 0; k <= N; ++k) sum += bt.G_at_u1(k)[static_cast<std::size_t>(n)];
            REQUIRE(sum == s.coeffs[static_cast<std::size_t>(n)]);
        }
        // f_2(5) = 3 shows up as the q^4 coefficient
        if (t == 2) {
            BigInt c4 = 0;
            for (int k = 0; k <= N; ++k) c4 += bt.G_at_u1(k)[4];
            CHECK(c4 == 3);
        }
    }
}

TEST_CASE("functional equation residual vanishes") {
    CHECK(check_functional_equation(2, 10) == 0);
    CHECK(check_functional_equation(3, 8) == 0);
    CHECK(check_functional_equation(5, 5) == 0);
}
