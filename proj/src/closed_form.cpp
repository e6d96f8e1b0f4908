#include "closed_form.hpp"

#include "bernoulli.hpp"
#include "errors.hpp"

namespace periodica {

namespace {

void check_parity(long q, const PeriodicFunction& g, const PrecisionContext& ctx) {
    if (q < 0) throw invalid_argument_error("closed form needs q >= 0");
    const bool q_even = (q % 2 == 0);
    if (q_even ? !g.is_even(ctx) : !g.is_odd(ctx))
        throw parity_error("closed form requires g and q of the same parity");
}

} // namespace

Complex l_closed_complex(long q, const PeriodicFunction& g, const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    if (g.is_identically_zero(ctx)) return Complex(wp);
    check_parity(q, g, ctx);
    if (q == 1 && g.abscissa_class(ctx) == AbscissaClass::divergent_at_1)
        throw divergent_series_error("L(1,g) diverges for nonzero mean");
    if (q == 0) {
        // L(0,g) = -g(0)/2 for even g, taken as given (no continuation here).
        return g.value(0, ctx) * Real::of(Rational(-1, 2), wp);
    }

    const long m = static_cast<long>(g.period());
    const RationalPolynomial bq = bernoulli_polynomial(static_cast<unsigned long>(q));
    const std::vector<Complex> ghat = g.dft(ctx);

    Complex sum(wp);
    for (long k = 0; k < m; ++k)
        sum += ghat[static_cast<std::size_t>(k)] *
               to_real(bq.eval(Rational(k, m)), ctx);

    // -(1/2) (2 pi)^q / q! times i^q
    Real mag = pow_si(pi_value(ctx) * 2, q) /
               Real::of(Integer::factorial(static_cast<unsigned long>(q)), wp);
    mag = ldexp(mag, -1).negate();
    switch (q % 4) {
        case 0: return sum * mag;
        case 1: return sum.mul_i() * mag;
        case 2: return -(sum * mag);
        default: return -(sum.mul_i() * mag);
    }
}

Complex l_closed_real(long q_arg, const PeriodicFunction& g, const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    if (g.is_identically_zero(ctx)) return Complex(wp);
    check_parity(q_arg, g, ctx);
    if (q_arg == 1 && g.abscissa_class(ctx) == AbscissaClass::divergent_at_1)
        throw divergent_series_error("L(1,g) diverges for nonzero mean");
    if (q_arg == 0) return g.value(0, ctx) * Real::of(Rational(-1, 2), wp);

    const bool even_g = (q_arg % 2 == 0);
    const long q = even_g ? q_arg / 2 : (q_arg - 1) / 2;
    const long m = static_cast<long>(g.period());
    const Real pi = pi_value(ctx);
    const RationalPolynomial bq = bernoulli_polynomial(static_cast<unsigned long>(q_arg));

    // inner trigonometric sums: sum_j g(j) cos(2 pi j k / m) (even g)
    //                           sum_j g(j) sin(2 pi j k / m) (odd g)
    Complex total(wp);
    for (long k = 0; k < m; ++k) {
        Complex inner(wp);
        for (long j = 0; j < m; ++j) {
            unsigned long r = (static_cast<unsigned long>(j) * static_cast<unsigned long>(k)) %
                              static_cast<unsigned long>(m);
            Real theta = pi * Real::of(Rational(2 * static_cast<long>(r), m), wp);
            Real s(wp), c(wp);
            sin_cos(s, c, theta);
            inner += g.value(j, ctx) * (even_g ? c : s);
        }
        total += inner * to_real(bq.eval(Rational(k, m)), ctx);
    }

    // (-1)^{q+1} (2 pi)^{q_arg} / q_arg! * 1/(2m)
    Real mag = pow_si(pi * 2, q_arg) /
               Real::of(Integer::factorial(static_cast<unsigned long>(q_arg)), wp);
    mag /= Real::of(2 * m, wp);
    if (q % 2 == 0) mag.negate();
    return total * mag;
}

Real zeta_even(long n, const PrecisionContext& ctx) {
    if (n < 0) throw invalid_argument_error("zeta_even needs n >= 0");
    const mpfr_prec_t wp = ctx.work_bits();
    if (n == 0) return Real::of(Rational(-1, 2), wp);
    // (2 pi i)^{2n} = (-1)^n (2 pi)^{2n}
    Real mag = pow_si(pi_value(ctx) * 2, 2 * n);
    Real b = to_real(bernoulli_number(static_cast<unsigned long>(2 * n)), ctx);
    Real fact = Real::of(Integer::factorial(static_cast<unsigned long>(2 * n)), wp);
    Real out = ldexp(mag * b / fact, -1);
    if (n % 2 == 0) out.negate();
    return out;
}

Real l4_closed_odd(long n, const PrecisionContext& ctx) {
    if (n < 0) throw invalid_argument_error("l4_closed_odd needs n >= 0");
    const mpfr_prec_t wp = ctx.work_bits();
    Real half_pi = ldexp(pi_value(ctx), -1);
    Real mag = pow_si(half_pi, 2 * n + 1);
    Real e = Real::of(euler_number(static_cast<unsigned long>(2 * n)), wp);
    Real fact = Real::of(Integer::factorial(static_cast<unsigned long>(2 * n)), wp);
    Real out = ldexp(mag * e / fact, -1);
    if (n % 2 == 1) out.negate();
    return out;
}

} // namespace periodica
