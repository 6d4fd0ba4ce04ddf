#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "huffcensus/counting.hpp"
#include "huffcensus/genfun.hpp"
#include "huffcensus/interval.hpp"
#include "huffcensus/rational.hpp"

namespace huffcensus {

// Raised when a certified computation cannot deliver its contract (sign-change
// count off, envelope violated, enclosure ordering broken). The CLI maps this
// to exit code 3.
struct certification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// log 2 = 2 atanh(1/3); the series has positive terms and remainder
//   sum_{k>m} x^{2k+1}/(2k+1) <= x^{2m+3} / ((2m+3)(1 - x^2)),  x = 1/3.
inline Interval log2_enclosure(int digits) {
    if (digits < 1) throw std::invalid_argument("log2_enclosure: digits must be positive");
    int terms = (digits + 10) * 21 / 20 + 2;  // 9^-k per term, log(10)/log(9) < 1.05
    Rational x2(1, 9);
    Rational sum = 0;
    Rational p(1, 3);  // x^(2k+1)
    for (int k = 0; k <= terms; ++k) {
        sum += p / (2 * k + 1);
        p *= x2;
    }
    Rational tail = p / (Rational(2 * terms + 3) * (1 - x2));
    return outward(Interval(2 * sum, 2 * (sum + tail)), detail::bits_for_digits(digits));
}

// pi = 16 atan(1/5) - 4 atan(1/239); alternating series, remainder bounded by
// the first omitted term.
inline Interval pi_enclosure(int digits) {
    if (digits < 1) throw std::invalid_argument("pi_enclosure: digits must be positive");
    auto atan_iv = [&](long long inv_x) {
        Rational x(1, inv_x), x2(1, inv_x * inv_x);
        Rational sum = 0, p = x;
        int k = 0;
        while (true) {
            Rational term = p / (2 * k + 1);
            if (term * ipow(10, digits + 6) < 1)
                return Interval(sum - term, sum + term);
            sum += (k % 2 == 0) ? term : -term;
            p *= x2;
            ++k;
        }
    };
    Interval v = Interval(Rational(16)) * atan_iv(5) - Interval(Rational(4)) * atan_iv(239);
    return outward(v, detail::bits_for_digits(digits));
}

// Improved (r3, R3) pairs computed by the authors for 2 <= t <= 15; beyond
// that the closed forms r3 = 1 + log2/t - (log2 - log2^2)/(2t^2) (outward
// upper bound) and R3 = 5 t^4 take over.
inline Rational table2_r3(int t) {
    static const char* vals[] = {"1.123", "1.098", "1.083", "1.074", "1.068", "1.063", "1.059",
                                 "1.056", "1.053", "1.050", "1.047", "1.044", "1.042", "1.040"};
    if (t < 2 || t > 15) throw std::out_of_range("table2_r3: t must be in [2,15]");
    return rational_from_decimal(vals[t - 2]);
}

inline Rational table2_R3(int t) {
    static const char* vals[] = {"36.6", "39.0", "58.4", "70.7", "50.0", "59.6", "48.1",
                                 "24.0", "19.7", "20.1", "26.6", "80.6", "43.3", "39.0"};
    if (t < 2 || t > 15) throw std::out_of_range("table2_R3: t must be in [2,15]");
    return rational_from_decimal(vals[t - 2]);
}

inline Rational r3_for(int t) {
    if (t < 2) throw std::invalid_argument("r3_for: t must be >= 2");
    if (t <= 15) return table2_r3(t);
    Interval L = log2_enclosure(30);
    Interval v = Interval(Rational(1)) + L / Interval(Rational(t)) -
                 (L - L * L) / Interval(Rational(2 * t * t));
    return v.hi;  // outward: a larger r3 only enlarges the error envelope
}

inline Rational R3_for(int t) {
    if (t < 2) throw std::invalid_argument("R3_for: t must be >= 2");
    if (t <= 15) return table2_R3(t);
    return Rational(5) * ipow(t, 4);
}

struct PolePair {
    Interval q1;  // contains 1/rho
    Interval q2;  // contains 1/rho2
};

// Certified isolation of the two real zeros of D on [1/2, 1/r3]: scan a
// dyadic grid for exactly two strict sign changes, then bisect each bracket
// to width <= 10^-digits. Midpoints stay dyadic throughout.
inline PolePair isolate_poles(int t, int digits) {
    if (t < 2 || t > 40)
        throw std::domain_error("isolate_poles: certified mode supports 2 <= t <= 40");
    if (digits < 1) throw std::invalid_argument("isolate_poles: digits must be positive");
    Rational left(1, 2);
    Rational right = round_down_dyadic(Rational(1) / r3_for(t), 24);
    Rational tol(1, ipow(10, digits));

    auto bisect = [&](Rational a, Rational b, int sa) {
        while (b - a > tol) {
            Rational mid = (a + b) / 2;
            int sm = certified_sign_D(t, mid, digits / 2 + 8);
            if (sm == sa)
                a = mid;
            else
                b = mid;
        }
        return Interval(a, b);
    };

    std::string fail;
    for (long long grid = 512; grid <= 8192; grid *= 4) {
        Rational step = (right - left) / grid;
        std::vector<int> sign(static_cast<std::size_t>(grid) + 1);
        bool undecided = false;
        for (long long i = 0; i <= grid; ++i) {
            try {
                sign[static_cast<std::size_t>(i)] = certified_sign_D(t, left + step * i, 12);
            } catch (const std::runtime_error& e) {
                fail = e.what();
                undecided = true;
                break;
            }
        }
        if (undecided) continue;
        std::vector<std::pair<long long, long long>> brackets;
        for (long long i = 0; i < grid; ++i)
            if (sign[static_cast<std::size_t>(i)] != sign[static_cast<std::size_t>(i + 1)])
                brackets.emplace_back(i, i + 1);
        if (brackets.size() != 2) {
            fail = "sign-change count = " + std::to_string(brackets.size()) + " != 2 on grid " +
                   std::to_string(grid);
            continue;
        }
        PolePair out;
        out.q1 = bisect(left + step * brackets[0].first, left + step * brackets[0].second,
                        sign[static_cast<std::size_t>(brackets[0].first)]);
        out.q2 = bisect(left + step * brackets[1].first, left + step * brackets[1].second,
                        sign[static_cast<std::size_t>(brackets[1].first)]);
        return out;
    }
    throw certification_error("isolate_poles(t=" + std::to_string(t) + "): " + fail);
}

// Enclosure of R = -N(q0)/D'(q0) over a certified pole bracket.
inline Interval residue_constant(int t, const Interval& q_pole, int digits) {
    NDCertified nd = eval_ND_certified(t, q_pole, digits + 4);
    if (nd.Dp.contains_zero())
        throw certification_error(
            "residue: D' enclosure contains zero (pole not simple at working precision)");
    return outward(-(nd.N / nd.Dp), detail::bits_for_digits(digits + 4));
}

struct AsymptoticConstants {
    int t = 2;
    int digits = 0;
    Interval rho;
    Interval rho2;
    Interval R;
    Interval R2;
    Rational r3;
    Rational R3;
};

inline AsymptoticConstants constants(int t, int digits) {
    if (digits < 1) throw std::invalid_argument("constants: digits must be positive");
    Rational tol(1, ipow(10, digits));
    AsymptoticConstants out;
    out.t = t;
    out.digits = digits;
    out.r3 = r3_for(t);
    out.R3 = R3_for(t);
    unsigned bits = detail::bits_for_digits(digits);
    for (int extra = 6;; extra *= 2) {
        PolePair p = isolate_poles(t, digits + extra);
        out.rho = outward(reciprocal(p.q1), bits);
        out.rho2 = outward(reciprocal(p.q2), bits);
        out.R = residue_constant(t, p.q1, digits + extra / 2);
        out.R2 = residue_constant(t, p.q2, digits + extra / 2);
        bool tight = out.rho.width() <= tol && out.rho2.width() <= tol &&
                     out.R.width() <= tol && out.R2.width() <= tol;
        if (tight) break;
        if (extra > 96)
            throw certification_error("constants: enclosures would not tighten to target width");
    }
    if (!(out.rho.lo > out.rho2.hi && out.rho2.lo > out.r3 && out.r3 > 1))
        throw certification_error("constants: ordering rho > rho2 > r3 > 1 not certified");
    if (!(out.R.lo > 0 && out.R2.lo > 0))
        throw certification_error("constants: amplitudes not certified positive");
    return out;
}

// Two-term prediction R rho^(n+1) + R2 rho2^(n+1) as an interval.
inline Interval approx_count(const AsymptoticConstants& c, long long n) {
    Interval v = c.R * pow_nonneg(c.rho, n + 1) + c.R2 * pow_nonneg(c.rho2, n + 1);
    return outward(v, detail::bits_for_digits(c.digits + 8));
}

struct CheckRow {
    long long n = 0;
    BigCount exact;
    Interval approx;
    Rational envelope;     // R3 r3^n
    Rational ratio_upper;  // certified upper bound of |c_n - approx| / envelope
};

struct AsymptoticCheckReport {
    int t = 2;
    long long n_max = 0;
    int digits = 0;
    bool ok = false;
    Rational worst_ratio;
    long long worst_n = 0;
    std::vector<CheckRow> rows;
};

// Certifies |c_n - (R rho^(n+1) + R2 rho2^(n+1))| <= R3 r3^n for all n <= n_max.
inline AsymptoticCheckReport verify_error_bound(int t, long long n_max, int digits) {
    if (n_max < 1) throw std::invalid_argument("verify_error_bound: n_max must be >= 1");
    AsymptoticConstants c = constants(t, digits);
    auto counts = count_trees_row(t, n_max);
    AsymptoticCheckReport rep{t, n_max, digits, true, Rational(0), 0, {}};
    Rational envelope = c.R3;
    for (long long n = 0; n <= n_max; ++n) {
        Interval ap = approx_count(c, n);
        Interval diff = ap - Interval(Rational(counts[static_cast<std::size_t>(n)]));
        Rational gap = mag(diff);
        Rational ratio = gap / envelope;
        rep.rows.push_back({n, counts[static_cast<std::size_t>(n)], ap, envelope, ratio});
        if (ratio > rep.worst_ratio) {
            rep.worst_ratio = ratio;
            rep.worst_n = n;
        }
        envelope *= c.r3;
    }
    rep.ok = rep.worst_ratio <= 1;
    return rep;
}

struct Theorem2Prediction {
    struct Band {
        Rational center;
        Rational half_width;
    };
    int t = 16;
    Band rho, rho2, r3, R, R2, R3;
};

inline Interval band_interval(const Theorem2Prediction::Band& b) {
    return Interval(b.center - b.half_width, b.center + b.half_width);
}

// The t >= 16 closed forms. Centers involving log 2 are the midpoints of a
// tight enclosure; that enclosure's half-width is folded into the band.
inline Theorem2Prediction theorem2_predictions(int t) {
    if (t < 16) throw std::domain_error("theorem2_predictions: requires t >= 16");
    Theorem2Prediction p;
    p.t = t;
    Interval L = log2_enclosure(40);
    Rational T(t);
    auto band = [](const Interval& iv, const Rational& eps) {
        return Theorem2Prediction::Band{iv.midpoint(), iv.width() / 2 + eps};
    };

    Interval one{Rational(1)};
    auto C = [](long long v) { return Interval(Rational(v)); };

    p.rho = band(Interval(Rational(2) - Rational(BigInt(1), ipow(2, t + 1)) -
                          Rational(BigInt(t + 3), ipow(2, 2 * t + 3)) -
                          Rational(3 * BigInt(t) * t + 19 * t + 24, ipow(2, 3 * t + 6))),
                 Rational(28 * ipow(t, 3), 100 * ipow(2, 4 * t)));

    Interval rho2_iv = one + L / T - (L - L * L) / Rational(2 * T * T) +
                       (C(4) * L * L * L + C(3) * L * L + C(6) * L) / Rational(24 * T * T * T) +
                       (C(2) * L * L * L * L + C(54) * L * L * L - C(27) * L * L - C(6) * L) /
                           Rational(48 * T * T * T * T);
    p.rho2 = band(rho2_iv, Rational(BigInt(26), BigInt(100) * ipow(t, 5)));

    p.r3 = band(one + L / T - (L - L * L) / Rational(2 * T * T), Rational(0));

    p.R = band(Interval(Rational(1, 8) + Rational(BigInt(t - 2), ipow(2, t + 5)) +
                        Rational(2 * BigInt(t) * t + 3 * t - 5, ipow(2, 2 * t + 7)) +
                        Rational(9 * ipow(t, 3) + 45 * BigInt(t) * t + 20 * t - 68,
                                 ipow(2, 3 * t + 10))),
               Rational(ipow(t, 4), 50 * ipow(2, 4 * t)));

    p.R2 = band(Interval(Rational(BigInt(1), 4 * BigInt(t))) - (C(4) * L + one) / Rational(8 * T * T),
                Rational(BigInt(77), BigInt(100) * ipow(t, 3)));

    p.R3 = Theorem2Prediction::Band{Rational(5) * ipow(t, 4), Rational(0)};
    return p;
}

namespace detail {

// Axis-aligned complex boxes; enough for the sampled check of |F| on the
// circle |q| = 1/r3.
struct ComplexBox {
    Interval re, im;
};

inline ComplexBox cmul(const ComplexBox& a, const ComplexBox& b, unsigned bits) {
    return {outward(a.re * b.re - a.im * b.im, bits), outward(a.re * b.im + a.im * b.re, bits)};
}

inline ComplexBox cdiv(const ComplexBox& a, const ComplexBox& b, unsigned bits) {
    Interval nsq = b.re * b.re + b.im * b.im;
    if (nsq.contains_zero()) throw std::domain_error("complex box division through zero");
    return {outward((a.re * b.re + a.im * b.im) / nsq, bits),
            outward((a.im * b.re - a.re * b.im) / nsq, bits)};
}

inline ComplexBox cpow(ComplexBox base, long long e, unsigned bits) {
    ComplexBox acc{Interval(Rational(1)), Interval(Rational(0))};
    while (e > 0) {
        if (e & 1) acc = cmul(acc, base, bits);
        e >>= 1;
        if (e) base = cmul(base, base, bits);
    }
    return acc;
}

// cos/sin at a rational point via Taylor series with the Lagrange remainder
// |theta|^(m)/m!.
inline std::pair<Interval, Interval> cos_sin_enclosure(const Rational& theta, int digits) {
    Rational tol(1, ipow(10, digits + 4));
    Rational c = 1, s = theta;
    Rational term = theta;  // theta^k / k!
    int k = 1;
    while (true) {
        term = term * theta / (k + 1);
        ++k;
        Rational at = abs(term);
        if (k % 2 == 0)
            c += (k % 4 == 0) ? term : -term;
        else
            s += (k % 4 == 1) ? term : -term;
        if (at < tol && abs(theta) < k + 1) {
            // remainder for both series bounded by |theta|^(k+1)/(k+1)!
            Rational rem = at * abs(theta) / (k + 1);
            unsigned bits = bits_for_digits(digits);
            return {outward(widen(Interval(c), rem), bits), outward(widen(Interval(s), rem), bits)};
        }
    }
}

}  // namespace detail

struct CircleBoundReport {
    int t = 2;
    int samples = 0;
    bool ok = false;
    Rational worst_ratio;  // max over samples of |N|_up / (5 t^4 |D|_lo)
};

// Sampled (not full-circle) verification of |F(q)| <= 5 t^4 on |q| = 1/r3:
// at each sampled argument the bound is certified via |N| <= |Re N| + |Im N|
// plus tails, |D| >= max(|Re D|, |Im D|) minus tails.
inline CircleBoundReport check_circle_bound(int t, int samples = 64, int digits = 10) {
    if (t < 2 || t > 40) throw std::domain_error("check_circle_bound: 2 <= t <= 40");
    if (samples < 1) throw std::invalid_argument("check_circle_bound: samples must be positive");
    unsigned bits = detail::bits_for_digits(digits);
    Rational radius = round_up_dyadic(Rational(1) / r3_for(t), bits);
    Interval pi = pi_enclosure(digits + 6);
    Rational bound = Rational(5) * ipow(t, 4);
    // radius_up covers the cos^2+sin^2 slack of the sampled boxes
    Rational radius_up = round_up_dyadic(radius * (1 + Rational(1, ipow(10, digits))), bits);
    Rational tol(1, ipow(10, digits + 4));
    int K = choose_K(t, radius_up, tol);
    auto tail_N = detail::tail_N_upper(t, radius_up, K, bits);
    auto tail_D = detail::tail_D_upper(t, radius_up, K, bits);

    CircleBoundReport rep{t, samples, true, Rational(0)};
    for (int s = 0; s < samples; ++s) {
        Interval theta = pi * Interval(Rational(2 * s, samples));
        auto [cosv, sinv] = detail::cos_sin_enclosure(theta.midpoint(), digits + 6);
        Rational slack = theta.width() / 2;  // |d cos| <= |dtheta|, same for sin
        detail::ComplexBox q{outward(widen(cosv, slack) * Interval(radius), bits),
                             outward(widen(sinv, slack) * Interval(radius), bits)};
        if (mag(q.re * q.re + q.im * q.im) > radius_up * radius_up)
            throw std::logic_error("check_circle_bound: sample box exceeds tail radius");
        detail::ComplexBox N{Interval(Rational(1)), Interval(Rational(0))};
        detail::ComplexBox D = N;
        detail::ComplexBox P = N;
        int sign = -1;
        for (int k = 1; k < K; ++k) {
            long long br = bracket(t, k);
            detail::ComplexBox qk = detail::cpow(q, br, bits);
            detail::ComplexBox om{Interval(Rational(1)) - qk.re, -qk.im};
            detail::ComplexBox f = detail::cdiv(qk, om, bits);
            P = detail::cmul(P, f, bits);
            detail::ComplexBox qkP = detail::cmul(qk, P, bits);
            if (sign > 0) {
                D.re = outward(D.re + P.re, bits);
                D.im = outward(D.im + P.im, bits);
                N.re = outward(N.re + qkP.re, bits);
                N.im = outward(N.im + qkP.im, bits);
            } else {
                D.re = outward(D.re - P.re, bits);
                D.im = outward(D.im - P.im, bits);
                N.re = outward(N.re - qkP.re, bits);
                N.im = outward(N.im - qkP.im, bits);
            }
            sign = -sign;
        }
        Rational n_up = mag(N.re) + mag(N.im) + *tail_N;
        auto dist_from_zero = [](const Interval& x) {
            if (x.contains_zero()) return Rational(0);
            return x.lo > 0 ? x.lo : -x.hi;
        };
        Rational d_lo = std::max(dist_from_zero(D.re), dist_from_zero(D.im)) - *tail_D;
        if (d_lo <= 0) {
            rep.ok = false;
            rep.worst_ratio = Rational(-1);
            return rep;
        }
        Rational ratio = n_up / (bound * d_lo);
        if (ratio > rep.worst_ratio) rep.worst_ratio = ratio;
    }
    rep.ok = rep.worst_ratio <= 1;
    return rep;
}

}  // namespace huffcensus
