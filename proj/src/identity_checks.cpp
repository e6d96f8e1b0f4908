#include "identity_checks.hpp"

#include <cmath>

#include "accel.hpp"
#include "closed_form.hpp"
#include "errors.hpp"

namespace periodica {

namespace {

constexpr double kLog2E = 1.4426950408889634074;

Real exp2_real(double log2v, const PrecisionContext& ctx) {
    return Real::exp2d(log2v, ctx.work_bits());
}

// sum_{k>=1} k^{-p} f(k) / (e^{2ak} - 1) for real p; returns the sum and a
// bound on the discarded tail.
struct RealPowSeries {
    Complex value;
    Real tail_bound;
    long terms = 0;
};

RealPowSeries exp_series_real_p(const PeriodicFunction& f, const Real& p, const Real& a,
                                const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    const double c = 2.0 * a.to_double();
    const double log2_C = std::log2(f.max_abs_upper()) - std::log2(-std::expm1(-c));
    const double target = detail::log2_trunc_target(ctx, 1);
    const long N = detail::series_length(log2_C, p.to_double(), c, target);

    const long m = static_cast<long>(f.period());
    const Real growth = exp(a * 2);
    const Real minus_p = -p;
    Real E = Real::of(1, wp);
    Real t(wp), u(wp);
    Complex acc(static_cast<mpfr_prec_t>(wp + 64));
    for (long n = 1; n <= N; ++n) {
        E *= growth;
        Complex v = f.value(n % m, ctx);
        if (v.is_zero()) continue;
        mpfr_sub_ui(t.raw(), E.raw(), 1, MPFR_RNDN);
        mpfr_ui_pow(u.raw(), static_cast<unsigned long>(n), minus_p.raw(), MPFR_RNDN);
        mpfr_div(u.raw(), u.raw(), t.raw(), MPFR_RNDN);
        acc += v * u;
    }
    RealPowSeries out;
    out.value = Complex(Real(wp), Real(wp));
    out.value.re().set(acc.re());
    out.value.im().set(acc.im());
    out.tail_bound = exp2_real(
        log2_C - p.to_double() * std::log2(static_cast<double>(N + 1)) -
            c * static_cast<double>(N + 1) * kLog2E + 2.0,
        ctx);
    out.terms = N;
    return out;
}

} // namespace

Residual make_residual(const Complex& lhs, const Complex& rhs) {
    Residual r{lhs, rhs, (lhs - rhs).abs(), Real(lhs.re().prec())};
    r.scale = max(max(lhs.abs(), rhs.abs()), Real::of(1L, lhs.re().prec()));
    return r;
}

ResidualReport partial_fraction_residual(const PeriodicFunction& f, const Real& s,
                                         const Real& x, long n_terms,
                                         const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    if (!(x.cmp(0) > 0)) throw invalid_argument_error("x must be positive");
    if (!(s.to_double() > 1.0))
        throw invalid_argument_error("partial_fraction_residual needs s > 1");
    if (n_terms < 8) throw invalid_argument_error("n_terms too small");

    if (f.is_identically_zero(ctx)) {
        Residual r = make_residual(Complex(wp), Complex(wp));
        return {r, Real(wp)};
    }

    const Real pi = pi_value(ctx);
    const double maxf = f.max_abs_upper();
    const double s_d = s.to_double();
    const double x_d = x.to_double();

    const long NF = std::min<long>(200000, 20 * n_terms);
    Evaluation F1 = l_direct(s + 1, f, NF, ctx);
    Evaluation F2 = l_direct(s + 2, f, NF, ctx);
    RealPowSeries E = exp_series_real_p(f, s + 1, pi / x, ctx);

    const Real pix = pi * x;
    Complex lhs = F1.value * ldexp(pix, -1) + E.value * pix;

    // double sum: x^2 sum_{n<=Nn} T_f(s, n x), inner length adapted per n
    const long Nn = n_terms;
    const double zeta_s = 1.0 + 1.0 / (s_d - 1.0);
    const double outer_tail = maxf * zeta_s / (x_d * x_d * static_cast<double>(Nn));
    const double eps_inner = outer_tail / static_cast<double>(Nn);

    Complex dsum(static_cast<mpfr_prec_t>(wp + 64));
    Real inner_bound_sum(wp);
    Real nx(wp);
    for (long n = 1; n <= Nn; ++n) {
        // K from min of the two tail shapes (both valid for s > 1)
        double k1 = std::pow(maxf / ((s_d + 1.0) * eps_inner), 1.0 / (s_d + 1.0));
        double ynx = x_d * static_cast<double>(n);
        double k2 = std::pow(maxf / ((s_d - 1.0) * ynx * ynx * eps_inner), 1.0 / (s_d - 1.0));
        long K = static_cast<long>(std::ceil(std::min(k1, k2)));
        K = std::max<long>(8, std::min<long>(K, 500000));
        mpfr_mul_si(nx.raw(), x.raw(), n, MPFR_RNDN);
        Evaluation T = t_direct(s, nx, f, K, ctx);
        dsum += T.value;
        inner_bound_sum += T.error_bound;
    }
    Real x2 = x * x;
    Complex rhs = F2.value * ldexp(x2, -1);
    {
        Complex dval(Real(wp), Real(wp));
        dval.re().set(dsum.re());
        dval.im().set(dsum.im());
        rhs += dval * x2;
    }

    Real bound = ldexp(pix, -1) * F1.error_bound + pix * E.tail_bound +
                 ldexp(x2, -1) * F2.error_bound +
                 x2 * (inner_bound_sum + Real::of(outer_tail, wp));
    return {make_residual(lhs, rhs), bound};
}

ResidualReport t_recurrence_residual(const PeriodicFunction& f, const Real& s, const Real& y,
                                     long q, long n_terms, const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    if (q < 0) throw invalid_argument_error("q must be >= 0");
    if (y.is_zero()) throw invalid_argument_error("y must be nonzero");
    if (f.is_identically_zero(ctx)) {
        Residual r = make_residual(Complex(wp), Complex(wp));
        return {r, Real(wp)};
    }
    const double sigma = f.sigma_upper(ctx);
    if (!(s.to_double() > sigma + 2.0 * static_cast<double>(q) - 2.0))
        throw invalid_argument_error("t_recurrence_residual needs s > sigma_f + 2q - 2");

    Evaluation lhs_ev = t_direct(s, y, f, n_terms, ctx);

    Evaluation t2 = t_direct(s - Real::of(2 * q, wp), y, f, n_terms, ctx);
    Real ym2q = pow_si(y, -2 * q);
    Complex rhs = t2.value * ym2q;
    if (q % 2 == 1) rhs = -rhs;
    Real bound = lhs_ev.error_bound + abs(ym2q) * t2.error_bound;

    for (long j = 1; j <= q; ++j) {
        Evaluation Fj = l_direct(s - Real::of(2 * j - 2, wp), f, n_terms, ctx);
        Real c = pow_si(y, -2 * j);
        if (j % 2 == 0) c.negate(); // (-1)^{j+1}
        rhs += Fj.value * c;
        bound += abs(c) * Fj.error_bound;
    }
    return {make_residual(lhs_ev.value, rhs), bound};
}

ResidualReport principal_value_residual(const PeriodicFunction& g, const Real& y,
                                        long n_pairs, const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    if (g.is_identically_zero(ctx)) {
        Residual r = make_residual(Complex(wp), Complex(wp));
        return {r, Real(wp)};
    }
    Evaluation lhs_ev = pv_sum(g, y, n_pairs, ctx);

    const long m = static_cast<long>(g.period());
    const Real pi = pi_value(ctx);
    const Real inv_m = Real::of(Rational(1, m), wp);
    Complex acc(wp);
    for (long k = 0; k < m; ++k) {
        Complex gk = g.value(k, ctx);
        if (gk.is_zero()) continue;
        Complex z = coth(Complex(y * inv_m * pi, pi * Real::of(Rational(k, m), wp)));
        acc += gk * z;
    }
    Complex rhs = acc * (pi * inv_m) - g.value(0, ctx) / y;
    return {make_residual(lhs_ev.value, rhs), lhs_ev.error_bound};
}

namespace {

// coth-form sum: (pi/m) sum_{k=k0}^{m-1} g(k) coth(pi (y + i k) / m)
Complex coth_sum(const PeriodicFunction& g, const Real& y, long k0,
                 const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    const long m = static_cast<long>(g.period());
    const Real pi = pi_value(ctx);
    Complex acc(wp);
    for (long k = k0; k < m; ++k) {
        Complex gk = g.value(k, ctx);
        if (gk.is_zero()) continue;
        Complex z = coth(Complex(pi * y / Real::of(m, wp), pi * Real::of(Rational(k, m), wp)));
        acc += gk * z;
    }
    return acc;
}

// omega-form sum: sum_{k=k0}^{m-1} g(k) / (e^{2 pi y / m} omega^k - 1)
Complex omega_sum(const PeriodicFunction& g, const Real& y, long k0,
                  const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    const long m = static_cast<long>(g.period());
    const Real pi = pi_value(ctx);
    const Real E = exp(pi * y * Real::of(Rational(2, m), wp));
    const Real Em1 = expm1(pi * y * Real::of(Rational(2, m), wp));
    Complex acc(wp);
    for (long k = k0; k < m; ++k) {
        Complex gk = g.value(k, ctx);
        if (gk.is_zero()) continue;
        Real theta = pi * Real::of(Rational(2 * k, m), wp);
        Real sphi(wp), cphi(wp);
        sin_cos(sphi, cphi, theta);
        Real halfsin = sin(ldexp(theta, -1));
        Real one_m_c = ldexp(halfsin * halfsin, 1);
        // denom = E omega^k - 1, real part via expm1 to dodge cancellation
        Complex denom(Em1 * cphi - one_m_c, E * sphi);
        acc += gk / denom;
    }
    return acc;
}

} // namespace

TForms odd_t_forms(const PeriodicFunction& g, const Real& y, long n_terms,
                   const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    if (!g.is_odd(ctx)) throw parity_error("odd_t_forms requires odd g");
    TForms out;
    if (g.is_identically_zero(ctx)) {
        Complex z(wp);
        out.direct = out.coth_form = out.omega_form = out.trig_form = z;
        out.direct_bound = Real(wp);
        out.direct_vs_coth = out.coth_vs_omega = out.omega_vs_trig = make_residual(z, z);
        return out;
    }

    Evaluation ev = t_direct(Real::of(-1L, wp), y, g, n_terms, ctx);
    out.direct = ev.value;
    out.direct_bound = ev.error_bound;

    const long m = static_cast<long>(g.period());
    const Real pi = pi_value(ctx);
    const Real inv_m = Real::of(Rational(1, m), wp);

    out.coth_form = coth_sum(g, y, 1, ctx).mul_i() * ldexp(pi * inv_m, -1);
    out.omega_form = omega_sum(g, y, 1, ctx).mul_i() * (pi * inv_m);

    // (pi/2m) sum g(k) sin(2 pi k/m) / (cosh(2 pi y/m) - cos(2 pi k/m))
    {
        Complex acc(wp);
        Real theta_y = pi * y * Real::of(Rational(2, m), wp);
        Real sh = sinh(ldexp(theta_y, -1));
        Real cosh_m1 = ldexp(sh * sh, 1);
        for (long k = 1; k < m; ++k) {
            Complex gk = g.value(k, ctx);
            if (gk.is_zero()) continue;
            Real theta = pi * Real::of(Rational(2 * k, m), wp);
            Real sphi(wp), cphi(wp);
            sin_cos(sphi, cphi, theta);
            Real halfsin = sin(ldexp(theta, -1));
            Real denom = cosh_m1 + ldexp(halfsin * halfsin, 1);
            acc += gk * (sphi / denom);
        }
        out.trig_form = acc * ldexp(pi * inv_m, -1);
    }

    out.direct_vs_coth = make_residual(out.direct, out.coth_form);
    out.coth_vs_omega = make_residual(out.coth_form, out.omega_form);
    out.omega_vs_trig = make_residual(out.omega_form, out.trig_form);
    return out;
}

TForms even_t_forms(const PeriodicFunction& g, const Real& y, long n_terms,
                    const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    if (!g.is_even(ctx)) throw parity_error("even_t_forms requires even g");
    TForms out;
    if (g.is_identically_zero(ctx)) {
        Complex z(wp);
        out.direct = out.coth_form = out.omega_form = out.trig_form = z;
        out.direct_bound = Real(wp);
        out.direct_vs_coth = out.coth_vs_omega = out.omega_vs_trig = make_residual(z, z);
        return out;
    }

    Evaluation ev = t_direct(Real::of(0L, wp), y, g, n_terms, ctx);
    out.direct = ev.value;
    out.direct_bound = ev.error_bound;

    const long m = static_cast<long>(g.period());
    const Real pi = pi_value(ctx);
    const Real inv_m = Real::of(Rational(1, m), wp);
    const Complex g0 = g.value(0, ctx);
    const Complex mean = g.mean(ctx);
    const Real inv_y = Real::of(1L, wp) / y;
    const Complex g0_term = g0 * ldexp(inv_y * inv_y, -1); // g(0)/(2y^2)

    out.coth_form = coth_sum(g, y, 0, ctx) * ldexp(pi * inv_y * inv_m, -1) - g0_term;
    out.omega_form = mean * ldexp(pi * inv_y, -1) - g0_term +
                     omega_sum(g, y, 0, ctx) * (pi * inv_y * inv_m);

    // real form with A_k(y) = e^{2 pi y/m} - cos(2 pi k/m):
    //   - pi/(y m) sum_k g(k) A_k(-y) / (A_k(y) + A_k(-y))
    {
        Complex acc(wp);
        Real theta_y = pi * y * Real::of(Rational(2, m), wp);
        Real sh = sinh(ldexp(theta_y, -1));
        Real cosh_m1 = ldexp(sh * sh, 1); // cosh(theta_y) - 1
        Real em1_neg = expm1(-theta_y);   // e^{-theta_y} - 1
        for (long k = 0; k < m; ++k) {
            Complex gk = g.value(k, ctx);
            if (gk.is_zero()) continue;
            Real theta = pi * Real::of(Rational(2 * k, m), wp);
            Real halfsin = sin(ldexp(theta, -1));
            Real one_m_c = ldexp(halfsin * halfsin, 1); // 1 - cos
            Real a_neg = em1_neg + one_m_c;             // A_k(-y)
            Real denom = ldexp(cosh_m1 + one_m_c, 1);   // A_k(y) + A_k(-y)
            acc += gk * (a_neg / denom);
        }
        out.trig_form = mean * ldexp(pi * inv_y, -1) - g0_term - acc * (pi * inv_y * inv_m);
    }

    out.direct_vs_coth = make_residual(out.direct, out.coth_form);
    out.coth_vs_omega = make_residual(out.coth_form, out.omega_form);
    out.omega_vs_trig = make_residual(out.omega_form, out.trig_form);
    return out;
}

IdentitySides accel_identity_sides_x(const PeriodicFunction& g, long q, const Real& x,
                                     IdentityForm form, long oracle_terms,
                                     const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    if (!(x.cmp(0) > 0)) throw invalid_argument_error("x must be positive");
    if (g.is_identically_zero(ctx)) return {Complex(wp), Complex(wp), Real(wp), 0};

    const bool odd_g = g.is_odd(ctx);
    const bool even_g = !odd_g && g.is_even(ctx);
    if (!odd_g && !even_g) throw parity_error("accel identity needs pure parity");
    if (odd_g && q < 1) throw invalid_argument_error("odd display needs q >= 1");
    if (even_g && q < 0) throw invalid_argument_error("even display needs q >= 0");

    const bool mean_zero = g.abscissa_class(ctx) != AbscissaClass::divergent_at_1;
    if (even_g && q == 0 && !mean_zero)
        throw invalid_argument_error("even display with q = 0 needs zero mean");

    const long m = static_cast<long>(g.period());
    const Real pi = pi_value(ctx);
    const Real pix = pi * x;
    const Real a = pi / x;                              // exp-kernel rate /2
    const Real rate = pix * Real::of(Rational(2, m), wp); // 2 pi x / m
    const long p = odd_g ? 2 * q : 2 * q + 1;
    const double target = detail::log2_trunc_target(ctx, 2);

    IdentitySides sides;
    Real bound(wp);

    // target value from the oracle
    Evaluation Ltar = l_direct(p, g, oracle_terms, ctx);
    sides.terms += Ltar.terms_used;
    bound += ldexp(pix, -1) * Ltar.error_bound;

    auto S = detail::exp_kernel_series(g, p, a, 0, target, ctx);
    sides.terms += S.terms;
    bound += pix * exp2_real(S.next_term_log2 + 2.0, ctx);

    // j-sum of closed values
    Complex J(wp);
    const long j_max = odd_g ? q : q + 1;
    for (long j = 0; j <= j_max; ++j) {
        const long arg = odd_g ? 2 * q - 2 * j + 1 : 2 * q - 2 * j + 2;
        Real c = pow_si(x, -2 * j + 2) * zeta_even(j, ctx);
        if (j % 2 == 1) c.negate(); // (-1)^j
        J += l_closed_complex(arg, g, ctx) * c;
    }

    sides.lhs = Ltar.value * ldexp(pix, -1) + S.value * pix + J;

    // zeta(2q+1) from the oracle when the even display needs it
    Complex half_m_zeta(wp);
    if (even_g && !mean_zero) {
        Evaluation zeta_ev =
            l_direct(2 * q + 1, PeriodicFunction::constant_one(), oracle_terms, ctx);
        sides.terms += zeta_ev.terms_used;
        half_m_zeta = g.mean(ctx) * ldexp(zeta_ev.value.re(), -1);
        Real coef = pi * pow_si(x, -2 * q + 1) * ldexp(g.mean(ctx).abs(), -1);
        bound += coef * zeta_ev.error_bound;
    }

    const Real inv_m = Real::of(Rational(1, m), wp);
    if (odd_g) {
        Real coef = pi * pow_si(x, -2 * q + 2);
        if (q % 2 == 1) coef.negate(); // (-1)^q
        if (form == IdentityForm::omega) {
            auto O = detail::omega_kernel_series(g, p, rate, /*skip_k0=*/true, 0, target, ctx);
            sides.terms += O.terms;
            bound += abs(coef) * inv_m * exp2_real(O.next_term_log2 + 2.0, ctx);
            sides.rhs = O.value.mul_i() * (coef * inv_m);
        } else {
            auto T = detail::trig_kernel_series_odd(g, p, rate, 0, target, ctx);
            sides.terms += T.terms;
            bound += abs(coef) * inv_m * exp2_real(T.next_term_log2 + 2.0, ctx);
            sides.rhs = T.value * ldexp(coef * inv_m, -1);
        }
    } else {
        Real coef = pi * pow_si(x, -2 * q + 1);
        if (q % 2 == 1) coef.negate(); // (-1)^q
        if (form == IdentityForm::omega) {
            auto O = detail::omega_kernel_series(g, p, rate, /*skip_k0=*/false, 0, target, ctx);
            sides.terms += O.terms;
            bound += abs(coef) * inv_m * exp2_real(O.next_term_log2 + 2.0, ctx);
            sides.rhs = (half_m_zeta + O.value * inv_m) * coef;
        } else {
            auto T = detail::trig_kernel_series_even(g, p, rate, 0, target, ctx);
            sides.terms += T.terms;
            bound += abs(coef) * inv_m * exp2_real(T.next_term_log2 + 2.0, ctx);
            // lemma real form: (1/2) coef (M zeta - (1/m) sum ... (e^{-th}-cos)/(cosh-cos))
            // trig kernel computes (cos - e^{-th})/(cosh - cos), absorbing the sign
            sides.rhs = (half_m_zeta * 2 + T.value * inv_m) * ldexp(coef, -1);
        }
    }

    sides.declared_bound = bound;
    return sides;
}

IdentitySides accel_identity_sides(const PeriodicFunction& g, long q, const Real& alpha,
                                   IdentityForm form, long oracle_terms,
                                   const PrecisionContext& ctx) {
    const Real pi = pi_value(ctx);
    Real x = pi / alpha;
    IdentitySides s = accel_identity_sides_x(g, q, x, form, oracle_terms, ctx);
    const bool odd_g = g.is_odd(ctx);
    Real scale = odd_g ? pow_si(alpha, -q) * sqrt(alpha) : pow_si(alpha, -q);
    scale /= pi * x;
    s.lhs = s.lhs * scale;
    s.rhs = s.rhs * scale;
    s.declared_bound = s.declared_bound * abs(scale);
    return s;
}

ResidualReport accel_identity_residual(const PeriodicFunction& g, long q, const Real& alpha,
                                       IdentityForm form, long oracle_terms,
                                       const PrecisionContext& ctx) {
    IdentitySides s = accel_identity_sides(g, q, alpha, form, oracle_terms, ctx);
    return {make_residual(s.lhs, s.rhs), s.declared_bound};
}

} // namespace periodica
