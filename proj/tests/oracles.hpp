#pragma once

// Test-side oracles, independent of the implementation paths they check.

#include <vector>

#include "bernoulli.hpp"
#include "periodic.hpp"
#include "rational.hpp"
#include "real.hpp"

namespace periodica::testing {

// Akiyama–Tanigawa triangle: B_n with B_1 = +1/2 in the raw algorithm; the
// returned sequence is converted to the B_1 = -1/2 convention used by the
// library (only index 1 differs).
inline std::vector<Rational> akiyama_tanigawa(unsigned long n_max) {
    std::vector<Rational> out;
    std::vector<Rational> row;
    for (unsigned long n = 0; n <= n_max; ++n) {
        row.emplace_back(Rational(1, static_cast<long>(n) + 1));
        for (unsigned long j = n; j >= 1; --j)
            row[j - 1] = Rational(static_cast<long>(j)) * (row[j - 1] - row[j]);
        out.push_back(row[0]);
    }
    if (n_max >= 1) out[1] = -out[1];
    return out;
}

// E_n by exact power-series division 1 / cosh over rationals.
inline std::vector<Integer> euler_by_series_division(unsigned long n_max) {
    // cosh coefficients c_j = [t^j] cosh t = 1/j! for even j, else 0
    std::vector<Rational> c(n_max + 1), inv(n_max + 1);
    for (unsigned long j = 0; j <= n_max; ++j)
        c[j] = (j % 2 == 0)
                   ? Rational(Integer(1), Integer::factorial(j))
                   : Rational(0);
    // inv = 1/cosh: inv_0 = 1; inv_n = -sum_{j=1..n} c_j inv_{n-j}
    inv[0] = Rational(1);
    for (unsigned long n = 1; n <= n_max; ++n) {
        Rational acc;
        for (unsigned long j = 1; j <= n; ++j) acc += c[j] * inv[n - j];
        inv[n] = -acc;
    }
    // E_n = n! * inv_n (must be an integer)
    std::vector<Integer> out;
    for (unsigned long n = 0; n <= n_max; ++n) {
        Rational e = inv[n] * Rational(Integer::factorial(n));
        out.push_back(e.numerator());
        if (!e.is_integer()) out.back() = Integer(0); // flagged by tests
    }
    return out;
}

// B_{n,chi} from the generating function sum_k chi(k) t e^{kt} / (e^{mt}-1),
// by exact truncated power-series division over Gaussian rationals.
inline GaussianRational gen_bernoulli_by_series(unsigned long n,
                                                const PeriodicFunction& chi) {
    const unsigned long m = chi.period();
    const unsigned long len = n + 2;
    // numerator N(t)/t: coefficient of t^j is sum_k chi(k) k^j / j!
    std::vector<GaussianRational> num(len), den(len);
    for (unsigned long j = 0; j < len; ++j) {
        GaussianRational acc;
        for (unsigned long k = 1; k <= m; ++k) {
            Rational kj(Integer::pow(Integer(static_cast<long>(k)), j),
                        Integer::factorial(j));
            acc = acc + chi.exact_value(static_cast<long>(k)) * kj;
        }
        num[j] = acc;
        // denominator (e^{mt}-1)/t: coefficient of t^j is m^{j+1}/(j+1)!
        den[j] = GaussianRational(
            Rational(Integer::pow(Integer(static_cast<long>(m)), j + 1),
                     Integer::factorial(j + 1)),
            Rational(0));
    }
    // series division q = num/den with den[0] = m != 0
    std::vector<GaussianRational> q(len);
    for (unsigned long j = 0; j < len; ++j) {
        GaussianRational acc = num[j];
        for (unsigned long i = 0; i < j; ++i) acc = acc - q[i] * den[j - i];
        q[j] = acc / den[0];
    }
    // B_{n,chi} = n! [t^n]
    Rational f(Integer::factorial(n));
    return {q[n].re * f, q[n].im * f};
}

// Machin's formula, an independent pi route.
inline Real machin_pi(const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits() + 16;
    Real a = atan(Real::of(Rational(1, 5), wp));
    Real b = atan(Real::of(Rational(1, 239), wp));
    return a * 16 - b * 4;
}

// |a - b| <= 2^{-bits} * max(|a|, 1)
inline bool close_bits(const Real& a, const Real& b, long bits) {
    Real scale = max(abs(a), Real::of(1L, a.prec()));
    return abs(a - b) <= scale * Real::exp2i(-bits, a.prec());
}

inline bool close_bits(const Complex& a, const Complex& b, long bits) {
    Real scale = max(a.abs(), Real::of(1L, a.re().prec()));
    return (a - b).abs() <= scale * Real::exp2i(-bits, a.re().prec());
}

} // namespace periodica::testing
