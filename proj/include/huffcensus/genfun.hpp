#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "huffcensus/interval.hpp"
#include "huffcensus/rational.hpp"

namespace huffcensus {

// F(q) = N(q)/D(q) with
//   [k]    = 1 + t + ... + t^{k-1}
//   f_j(q) = q^[j]/(1 - q^[j])
//   N_K(q) = sum_{0<=k<K} (-1)^k q^[k] prod_{j<=k} f_j(q)
//   D_K(q) = sum_{0<=k<K} (-1)^k        prod_{j<=k} f_j(q)
// and tails controlled by |q|^[K+1] < 1/2.

inline BigInt bracket_big(int t, int k) {
    if (t < 2) throw std::invalid_argument("bracket: t must be >= 2");
    if (k < 0) throw std::invalid_argument("bracket: k must be >= 0");
    return (ipow(t, k) - 1) / (t - 1);
}

inline long long bracket(int t, int k) {
    BigInt b = bracket_big(t, k);
    if (b > std::numeric_limits<long long>::max())
        throw std::overflow_error("bracket: [k] exceeds 64 bits");
    return b.convert_to<long long>();
}

struct NDEval {
    Rational N;
    Rational D;
    Rational Dp;  // D_K'
};

// Exact rational evaluation of (N_K, D_K, D_K') at a point, product rule for
// the derivative. |q| < 1 keeps every f_j finite.
inline NDEval eval_ND(int t, const Rational& q, int K) {
    if (K < 1) throw std::invalid_argument("eval_ND: K must be >= 1");
    if (abs(q) >= 1) throw std::domain_error("eval_ND: |q| must be < 1 (pole of some f_j)");
    NDEval out{Rational(1), Rational(1), Rational(0)};
    Rational P(1), Pp(0);
    int sign = -1;
    for (int k = 1; k < K; ++k) {
        long long br = bracket(t, k);
        Rational qk = qpow(q, br);
        Rational om = 1 - qk;
        Rational f = qk / om;
        Rational fp = Rational(br) * qpow(q, br - 1) / (om * om);
        Pp = Pp * f + P * fp;
        P = P * f;
        out.D += sign * P;
        out.Dp += sign * Pp;
        out.N += sign * (qk * P);
        sign = -sign;
    }
    return out;
}

inline Rational eval_D(int t, const Rational& q, int K) { return eval_ND(t, q, K).D; }

struct TailBound {
    int t = 2;
    int K = 0;
    Rational radius;
    Rational bound_N;
    Rational bound_D;
};

// |D - D_K| and |N - N_K| for |q| <= radius, requiring radius^[K+1] < 1/2.
inline TailBound tail_bounds(int t, const Rational& radius, int K) {
    if (K < 0) throw std::invalid_argument("tail_bounds: K must be >= 0");
    if (radius < 0 || radius >= 1) throw std::domain_error("tail_bounds: radius must be in [0,1)");
    Rational rho_hat = qpow(radius, bracket(t, K + 1));
    if (!(rho_hat < Rational(1, 2)))
        throw std::domain_error("tail_bounds: radius^[K+1] must be < 1/2 (radius too large for K)");
    Rational lead = (1 - rho_hat) / (1 - 2 * rho_hat);
    Rational prod(1);
    long long exp_sum = 0;
    for (int j = 1; j <= K; ++j) {
        long long br = bracket(t, j);
        exp_sum += br;
        prod *= Rational(1) / (1 - qpow(radius, br));
    }
    TailBound tb{t, K, radius, Rational(0), Rational(0)};
    tb.bound_D = lead * prod * qpow(radius, exp_sum);
    tb.bound_N = tb.bound_D * qpow(radius, bracket(t, K));
    return tb;
}

namespace detail {

// Dyadic upper bound on the Lemma-1 denominator tail; nullopt when the
// radius^[K+1] < 1/2 precondition cannot be verified at this K. Cheap for any
// K and exponent because every factor is rounded outward.
inline std::optional<Rational> tail_D_upper(int t, const Rational& radius, int K, unsigned bits) {
    BigInt brK1 = bracket_big(t, K + 1);
    if (brK1 > std::numeric_limits<long long>::max()) return std::nullopt;
    Rational rho_hat = pow_upper(radius, brK1.convert_to<long long>(), bits);
    if (!(rho_hat < Rational(1, 2))) return std::nullopt;
    Rational lead = round_up_dyadic((1 - rho_hat) / (1 - 2 * rho_hat), bits);
    Rational prod(1);
    BigInt exp_sum = 0;
    for (int j = 1; j <= K; ++j) {
        long long br = bracket(t, j);
        exp_sum += br;
        Rational rj = pow_upper(radius, br, bits);
        if (!(rj < 1)) return std::nullopt;
        prod = round_up_dyadic(prod / (1 - rj), bits);
    }
    if (exp_sum > std::numeric_limits<long long>::max()) return std::nullopt;
    return round_up_dyadic(lead * prod, bits) *
           pow_upper(radius, exp_sum.convert_to<long long>(), bits);
}

inline std::optional<Rational> tail_N_upper(int t, const Rational& radius, int K, unsigned bits) {
    auto d = tail_D_upper(t, radius, K, bits);
    if (!d) return std::nullopt;
    return round_up_dyadic(*d * pow_upper(radius, bracket(t, K), bits), bits);
}

// Upper bound on |D' - D_K'| for real q in (q_lo, radius], q_lo > 0.
// From P_k' = P_k * sum_j [j]/(q (1-q^[j])) and sum_{j<=k}[j] <= t^{k+1}/(t-1)^2:
//   tail <= P_K(radius) * t^{K+1} / ((t-1)^2 q_lo (1-radius)) * 1/(1 - t f_{K+1}(radius)).
inline std::optional<Rational> tail_Dp_upper(int t, const Rational& q_lo, const Rational& radius,
                                             int K, unsigned bits) {
    if (!(q_lo > 0) || !(radius < 1)) return std::nullopt;
    BigInt brK1 = bracket_big(t, K + 1);
    if (brK1 > std::numeric_limits<long long>::max()) return std::nullopt;
    Rational PK(1);
    for (int j = 1; j <= K; ++j) {
        Rational rj = pow_upper(radius, bracket(t, j), bits);
        if (!(rj < 1)) return std::nullopt;
        PK = round_up_dyadic(PK * rj / (1 - rj), bits);
    }
    Rational rK1 = pow_upper(radius, brK1.convert_to<long long>(), bits);
    if (!(rK1 < 1)) return std::nullopt;
    Rational beta = round_up_dyadic(rK1 / (1 - rK1), bits);
    if (!(Rational(t) * beta < 1)) return std::nullopt;
    Rational geom = round_up_dyadic(Rational(1) / (1 - Rational(t) * beta), bits);
    Rational scale = round_up_dyadic(
        Rational(ipow(t, K + 1), BigInt(t - 1) * (t - 1)) / (q_lo * (1 - radius)), bits);
    return round_up_dyadic(PK * scale * geom, bits);
}

struct Rounder {
    unsigned bits;
    Interval rnd(const Interval& x) const { return outward(x, bits); }
    Interval mul(const Interval& a, const Interval& b) const { return rnd(a * b); }
    Interval div(const Interval& a, const Interval& b) const { return rnd(a / b); }
    Interval pow(Interval base, long long e) const {
        Interval acc{Rational(1)};
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            e >>= 1;
            if (e) base = mul(base, base);
        }
        return acc;
    }
};

inline unsigned bits_for_digits(int digits) {
    return static_cast<unsigned>((digits + 12) * 10 / 3 + 32);
}

}  // namespace detail

// Smallest K whose denominator tail at this radius drops below tol; throws if
// none exists up to K = 64 (radius too close to 1).
inline int choose_K(int t, const Rational& radius, const Rational& tol) {
    unsigned bits = 192;
    for (int K = 1; K <= 64; ++K) {
        auto tail = detail::tail_D_upper(t, radius, K, bits);
        if (tail && *tail <= tol) return K;
    }
    throw std::runtime_error("choose_K: cannot reach target tail (radius too close to 1)");
}

struct NDCertified {
    Interval N;
    Interval D;
    Interval Dp;
    int K = 0;
};

namespace detail {

inline NDCertified eval_ND_certified_impl(int t, const Interval& q, int digits, bool with_NDp) {
    if (!(q.lo >= 0) || !(q.hi < 1))
        throw std::domain_error("certified evaluation requires q within [0,1)");
    if (with_NDp && !(q.lo > 0))
        throw std::domain_error("certified N/D' evaluation requires q within (0,1)");
    Rational radius = q.hi;
    Rational tol = Rational(1, ipow(10, digits + 4));  // 4 guard digits
    int K = choose_K(t, radius, tol);
    // For the derivative the geometric tail can demand a slightly deeper cut.
    unsigned tb = 192;
    if (with_NDp) {
        while (K <= 64) {
            auto dp = tail_Dp_upper(t, q.lo, radius, K, tb);
            if (dp && *dp <= tol) break;
            ++K;
        }
        if (K > 64) throw std::runtime_error("eval_ND_certified: derivative tail out of reach");
    }
    Rounder R{bits_for_digits(digits)};
    Interval one{Rational(1)};
    NDCertified out{one, one, Interval{Rational(0)}, K};
    Interval P = one, Pp{Rational(0)};
    int sign = -1;
    for (int k = 1; k < K; ++k) {
        long long br = bracket(t, k);
        Interval qk = R.pow(q, br);
        Interval om = Interval{Rational(1)} - qk;
        if (om.contains_zero() || om.lo <= 0)
            throw std::runtime_error("certified evaluation: cannot separate q^[k] from 1");
        Interval f = R.div(qk, om);
        if (with_NDp) {
            Interval fp = R.div(R.mul(Interval{Rational(br)}, R.pow(q, br - 1)), R.mul(om, om));
            Pp = R.rnd(R.mul(Pp, f) + R.mul(P, fp));
        }
        P = R.mul(P, f);
        Interval sP = (sign > 0) ? P : -P;
        out.D = R.rnd(out.D + sP);
        if (with_NDp) {
            out.N = R.rnd(out.N + ((sign > 0) ? R.mul(qk, P) : -R.mul(qk, P)));
            out.Dp = R.rnd(out.Dp + ((sign > 0) ? Pp : -Pp));
        }
        sign = -sign;
    }
    auto tail_D = tail_D_upper(t, radius, K, tb);
    out.D = widen(out.D, *tail_D);
    if (with_NDp) {
        auto tail_N = tail_N_upper(t, radius, K, tb);
        auto tail_Dp = tail_Dp_upper(t, q.lo, radius, K, tb);
        out.N = widen(out.N, *tail_N);
        out.Dp = widen(out.Dp, *tail_Dp);
    }
    return out;
}

}  // namespace detail

// Interval certified to contain D(x) for every x in q; truncation index K is
// the smallest with tail <= 10^-(digits+4).
inline Interval eval_D_certified(int t, const Interval& q, int digits) {
    return detail::eval_ND_certified_impl(t, q, digits, false).D;
}

inline NDCertified eval_ND_certified(int t, const Interval& q, int digits) {
    return detail::eval_ND_certified_impl(t, q, digits, true);
}

// Strict sign of D at a point in (0,1); escalates precision until the
// enclosure excludes zero.
inline int certified_sign_D(int t, const Rational& q, int digits_hint = 12) {
    for (int digits = std::max(4, digits_hint); digits <= 4096; digits *= 2) {
        Interval v = eval_D_certified(t, Interval(q), digits);
        if (!v.contains_zero()) return v.lo > 0 ? 1 : -1;
    }
    throw std::runtime_error("cannot certify sign of D at q = " + to_fraction_string(q));
}

struct SeriesTruncation {
    int t = 2;
    long long order = 0;
    std::vector<BigCount> coeffs;  // c_0 ... c_order
};

// Exact series coefficients of F: expand each f_j as sum of q^{m[j]},
// accumulate N_K and D_K mod q^(N+1) with K minimal such that
// sum_{j<=K} [j] > N, then divide (D has constant term 1, so the quotient is
// integral; nonnegativity is asserted as a structural self-check).
inline SeriesTruncation series_F(int t, long long N) {
    if (t < 2) throw std::invalid_argument("series_F: t must be >= 2");
    if (N < 0) throw std::invalid_argument("series_F: negative order");
    auto n = static_cast<std::size_t>(N);
    using Poly = std::vector<BigInt>;
    auto mul_trunc = [n](const Poly& a, const Poly& b) {
        Poly out(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (b[j] != 0) out[i + j] += a[i] * b[j];
            }
        }
        return out;
    };
    Poly Np(n + 1), Dp(n + 1), P(n + 1);
    Np[0] = 1;
    Dp[0] = 1;
    P[0] = 1;
    int sign = -1;
    for (int k = 1;; ++k) {
        BigInt br_big = bracket_big(t, k);
        if (br_big > N) break;  // f_k == 0 mod q^(N+1)
        auto br = br_big.convert_to<long long>();
        Poly f(n + 1);
        for (long long m = br; m <= N; m += br) f[static_cast<std::size_t>(m)] = 1;
        P = mul_trunc(P, f);
        bool zero = true;
        for (const auto& c : P)
            if (c != 0) { zero = false; break; }
        if (zero) break;  // valuation sum_{j<=k}[j] exceeded N
        for (std::size_t i = 0; i <= n; ++i) Dp[i] += sign * P[i];
        for (std::size_t i = 0; i + static_cast<std::size_t>(br) <= n; ++i)
            Np[i + static_cast<std::size_t>(br)] += sign * P[i];
        sign = -sign;
    }
    SeriesTruncation s{t, N, std::vector<BigCount>(n + 1)};
    for (std::size_t i = 0; i <= n; ++i) {
        BigInt acc = Np[i];
        for (std::size_t j = 1; j <= i; ++j) acc -= Dp[j] * s.coeffs[i - j];
        if (acc < 0) throw std::logic_error("series_F: negative coefficient");
        s.coeffs[i] = acc;
    }
    return s;
}

struct BivariateTruncation {
    int t = 2;
    int order = 0;
    // G[k][n][m] = [q^n u^m] G_k; u-degree of G_k is at most (t-1)n + 1.
    std::vector<std::vector<std::vector<BigInt>>> G;

    std::vector<BigInt> G_at_u1(int k) const {
        std::vector<BigInt> out(G[static_cast<std::size_t>(k)].size());
        for (std::size_t nn = 0; nn < out.size(); ++nn)
            for (const auto& c : G[static_cast<std::size_t>(k)][nn]) out[nn] += c;
        return out;
    }
};

// Height-refined recursion: each monomial q^n u^m of G_k spawns
// sum_{j=1}^{m} q^{n+j} u^{jt} in G_{k+1} (a tree of height k with m deepest
// leaves branches at 1 <= j <= m of them).
inline BivariateTruncation bivariate_G(int t, int N) {
    if (t < 2) throw std::invalid_argument("bivariate_G: t must be >= 2");
    if (N < 0) throw std::invalid_argument("bivariate_G: negative order");
    auto n = static_cast<std::size_t>(N);
    auto umax = static_cast<std::size_t>(t - 1) * n + 1;
    BivariateTruncation bt{t, N, {}};
    bt.G.assign(n + 1, std::vector<std::vector<BigInt>>(n + 1, std::vector<BigInt>(umax + 1)));
    bt.G[0][0][1] = 1;  // G_0 = u
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t nn = k; nn <= n; ++nn) {
            for (std::size_t m = 1; m <= umax; ++m) {
                const BigInt& c = bt.G[k][nn][m];
                if (c == 0) continue;
                std::size_t jmax = std::min(m, n - nn);
                for (std::size_t j = 1; j <= jmax; ++j)
                    bt.G[k + 1][nn + j][j * static_cast<std::size_t>(t)] += c;
            }
        }
    }
    return bt;
}

// Residual of (1 - q u^t)(G - u) - q u^t (G(q,1) - G(q, q u^t)) mod q^(N+1);
// the functional equation makes it identically zero.
inline BigInt check_functional_equation(int t, int N) {
    auto bt = bivariate_G(t, N);
    auto n = static_cast<std::size_t>(N);
    auto ts = static_cast<std::size_t>(t);
    std::size_t U = ts * (n + 1) + 1;
    auto grid = [&] { return std::vector<std::vector<BigInt>>(n + 1, std::vector<BigInt>(U + 1)); };

    auto G = grid();
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t nn = 0; nn <= n; ++nn)
            for (std::size_t m = 0; m < bt.G[k][nn].size(); ++m) G[nn][m] += bt.G[k][nn][m];

    auto residual = grid();  // (G - u), then multiplied by (1 - q u^t)
    for (std::size_t nn = 0; nn <= n; ++nn)
        for (std::size_t m = 0; m <= U; ++m) residual[nn][m] = G[nn][m];
    residual[0][1] -= 1;
    for (std::size_t nn = n; nn >= 1; --nn)
        for (std::size_t m = U; m >= ts; --m) residual[nn][m] -= residual[nn - 1][m - ts];

    // q u^t (G(q,1) - G(q, q u^t))
    for (std::size_t nn = 0; nn + 1 <= n; ++nn) {
        BigInt at_u1 = 0;
        for (std::size_t m = 0; m <= U; ++m) at_u1 += G[nn][m];
        residual[nn + 1][ts] -= at_u1;
    }
    for (std::size_t nn = 0; nn <= n; ++nn)
        for (std::size_t m = 0; m <= U; ++m) {
            if (G[nn][m] == 0 || nn + m + 1 > n) continue;
            residual[nn + m + 1][ts * m + ts] += G[nn][m];
        }

    BigInt worst = 0;
    for (const auto& row : residual)
        for (const auto& c : row)
            if (abs(c) > worst) worst = abs(c);
    return worst;
}

}  // namespace huffcensus
