#include "accel.hpp"

#include <cmath>

#include "bernoulli.hpp"
#include "errors.hpp"

namespace periodica {

namespace detail {

namespace {
constexpr double kLog2E = 1.4426950408889634074;

double log2_1m_exp(double c) {
    // log2(1 - e^{-c}) for c > 0
    return std::log2(-std::expm1(-c));
}
} // namespace

long series_length(double log2_C, double poly_a, double rate_c, double log2_target) {
    if (!(rate_c > 0)) throw invalid_argument_error("series rate must be positive");
    const double geo = log2_1m_exp(rate_c);
    long n = 1;
    const long cap = 200000000;
    while (n < cap) {
        double tail = log2_C - geo - poly_a * std::log2(static_cast<double>(n + 1)) -
                      rate_c * static_cast<double>(n + 1) * kLog2E;
        if (tail < log2_target) return n;
        // jump most of the remaining distance, then settle one step at a time
        double deficit = (tail - log2_target) / (rate_c * kLog2E);
        long step = deficit > 2.0 ? static_cast<long>(deficit * 0.9) : 1;
        n += step;
    }
    throw invalid_argument_error("series truncation did not converge (rate too small)");
}

double log2_trunc_target(const PrecisionContext& ctx, int n_series) {
    return -static_cast<double>(ctx.work_bits()) - std::log2(static_cast<double>(n_series));
}

namespace {

struct ComplexTable {
    std::vector<Complex> val;
    std::vector<bool> nonzero;
    double abs_sum = 0.0;
};

ComplexTable complex_table(const PeriodicFunction& g, const PrecisionContext& ctx) {
    ComplexTable t;
    const long m = static_cast<long>(g.period());
    for (long k = 0; k < m; ++k) {
        Complex v = g.value(k, ctx);
        bool nz = g.exact() ? !g.exact_value(k).is_zero() : !v.is_zero();
        t.abs_sum += std::abs(v.re().to_double()) + std::abs(v.im().to_double());
        t.val.push_back(std::move(v));
        t.nonzero.push_back(nz);
    }
    t.abs_sum += 1e-300;
    return t;
}

double next_term_log2(double log2_C, double poly_a, double rate_c, long n_used) {
    return log2_C - poly_a * std::log2(static_cast<double>(n_used + 1)) -
           rate_c * static_cast<double>(n_used + 1) * kLog2E;
}

} // namespace

SeriesSum exp_kernel_series(const PeriodicFunction& g, long p, const Real& a,
                            long forced_terms, double log2_target,
                            const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    const double c = 2.0 * a.to_double();
    ComplexTable tab = complex_table(g, ctx);
    const double log2_C = std::log2(g.max_abs_upper()) - log2_1m_exp(c);

    const long N = forced_terms > 0 ? forced_terms : series_length(log2_C, p, c, log2_target);
    const long m = static_cast<long>(g.period());

    const Real growth = exp(a * 2);
    Real E = Real::of(1, wp);
    Real t(wp), u(wp);
    Complex acc(static_cast<mpfr_prec_t>(wp + 64));
    for (long n = 1; n <= N; ++n) {
        E *= growth;
        const std::size_t idx = static_cast<std::size_t>(n % m);
        if (!tab.nonzero[idx]) continue;
        mpfr_sub_ui(t.raw(), E.raw(), 1, MPFR_RNDN);           // e^{2na} - 1
        mpfr_ui_pow_ui(u.raw(), static_cast<unsigned long>(n),
                       static_cast<unsigned long>(p), MPFR_RNDN); // n^p
        mpfr_mul(t.raw(), t.raw(), u.raw(), MPFR_RNDN);
        mpfr_ui_div(t.raw(), 1, t.raw(), MPFR_RNDN);           // n^{-p}/(e^{2na}-1)
        acc += tab.val[idx] * t;
    }
    SeriesSum out;
    out.value = Complex(Real(wp), Real(wp));
    out.value.re().set(acc.re());
    out.value.im().set(acc.im());
    out.terms = N;
    out.next_term_log2 = next_term_log2(log2_C, p, c, N);
    return out;
}

SeriesSum omega_kernel_series(const PeriodicFunction& g, long p, const Real& rate,
                              bool skip_k0, long forced_terms, double log2_target,
                              const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    const double c = rate.to_double();
    ComplexTable tab = complex_table(g, ctx);
    const double log2_C = std::log2(tab.abs_sum) - log2_1m_exp(c);

    const long N = forced_terms > 0 ? forced_terms : series_length(log2_C, p, c, log2_target);
    const long m = static_cast<long>(g.period());
    const Real pi = pi_value(ctx);
    const Real growth = exp(rate);

    Complex total(static_cast<mpfr_prec_t>(wp + 64));
    long used = 0;
    Real E(wp), np(wp), nrm(wp), dre(wp), dim(wp), t(wp);
    for (long k = skip_k0 ? 1 : 0; k < m; ++k) {
        if (!tab.nonzero[static_cast<std::size_t>(k)]) continue;
        Real theta = pi * Real::of(Rational(2 * k, m), wp);
        Real cphi(wp), sphi(wp);
        sin_cos(sphi, cphi, theta);
        Real one_m_c(wp); // 1 - cos(phi) = 2 sin^2(phi/2), safe for small phi
        {
            Real half = sin(ldexp(theta, -1));
            one_m_c = ldexp(half * half, 1);
        }
        Complex inner(static_cast<mpfr_prec_t>(wp + 64));
        E.set(1);
        for (long n = 1; n <= N; ++n) {
            E *= growth;
            // denom = E*omega^k - 1 with re = (E-1)cos - (1-cos)
            mpfr_sub_ui(t.raw(), E.raw(), 1, MPFR_RNDN);
            mpfr_mul(dre.raw(), t.raw(), cphi.raw(), MPFR_RNDN);
            mpfr_sub(dre.raw(), dre.raw(), one_m_c.raw(), MPFR_RNDN);
            mpfr_mul(dim.raw(), E.raw(), sphi.raw(), MPFR_RNDN);
            // n^{-p} / |denom|^2
            mpfr_sqr(nrm.raw(), dre.raw(), MPFR_RNDN);
            mpfr_sqr(t.raw(), dim.raw(), MPFR_RNDN);
            mpfr_add(nrm.raw(), nrm.raw(), t.raw(), MPFR_RNDN);
            mpfr_ui_pow_ui(np.raw(), static_cast<unsigned long>(n),
                           static_cast<unsigned long>(p), MPFR_RNDN);
            mpfr_mul(nrm.raw(), nrm.raw(), np.raw(), MPFR_RNDN);
            mpfr_ui_div(t.raw(), 1, nrm.raw(), MPFR_RNDN);
            // inner += t * conj(denom)
            mpfr_mul(np.raw(), t.raw(), dre.raw(), MPFR_RNDN);
            mpfr_add(inner.re().raw(), inner.re().raw(), np.raw(), MPFR_RNDN);
            mpfr_mul(np.raw(), t.raw(), dim.raw(), MPFR_RNDN);
            mpfr_sub(inner.im().raw(), inner.im().raw(), np.raw(), MPFR_RNDN);
            ++used;
        }
        total += tab.val[static_cast<std::size_t>(k)] * Complex(inner.re(), inner.im());
    }
    SeriesSum out;
    out.value = Complex(Real(wp), Real(wp));
    out.value.re().set(total.re());
    out.value.im().set(total.im());
    out.terms = used;
    out.next_term_log2 = next_term_log2(log2_C, p, c, N);
    return out;
}

SeriesSum trig_kernel_series_odd(const PeriodicFunction& g, long p, const Real& rate,
                                 long forced_terms, double log2_target,
                                 const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    const double c = rate.to_double();
    ComplexTable tab = complex_table(g, ctx);
    const double log2_C = std::log2(tab.abs_sum) + 1.0 - 2.0 * log2_1m_exp(c);

    const long N = forced_terms > 0 ? forced_terms : series_length(log2_C, p, c, log2_target);
    const long m = static_cast<long>(g.period());
    const Real pi = pi_value(ctx);

    struct Slot {
        std::size_t k;
        Real sin_phi;
        Real one_m_cos; // 2 sin^2(phi/2)
        Real acc;
    };
    std::vector<Slot> slots;
    for (long k = 1; k < m; ++k) {
        if (!tab.nonzero[static_cast<std::size_t>(k)]) continue;
        if (2 * k == m) continue; // sin(pi) = 0 contributes nothing
        Real theta = pi * Real::of(Rational(2 * k, m), wp);
        Real s(wp), cph(wp);
        sin_cos(s, cph, theta);
        Real halfsin = sin(ldexp(theta, -1));
        slots.push_back(Slot{static_cast<std::size_t>(k), s, ldexp(halfsin * halfsin, 1),
                             Real(static_cast<mpfr_prec_t>(wp + 64))});
    }

    long used = 0;
    Real np(wp), h(wp), t(wp);
    const Real half_rate = ldexp(rate, -1);
    for (long n = 1; n <= N && !slots.empty(); ++n) {
        mpfr_mul_si(h.raw(), half_rate.raw(), n, MPFR_RNDN);
        mpfr_sinh(h.raw(), h.raw(), MPFR_RNDN);
        mpfr_sqr(h.raw(), h.raw(), MPFR_RNDN);
        mpfr_mul_2si(h.raw(), h.raw(), 1, MPFR_RNDN); // 2 sinh^2(n rate / 2)
        mpfr_ui_pow_ui(np.raw(), static_cast<unsigned long>(n),
                       static_cast<unsigned long>(p), MPFR_RNDN);
        for (auto& sl : slots) {
            mpfr_add(t.raw(), h.raw(), sl.one_m_cos.raw(), MPFR_RNDN); // cosh - cos
            mpfr_mul(t.raw(), t.raw(), np.raw(), MPFR_RNDN);
            mpfr_ui_div(t.raw(), 1, t.raw(), MPFR_RNDN);
            mpfr_add(sl.acc.raw(), sl.acc.raw(), t.raw(), MPFR_RNDN);
            ++used;
        }
    }

    Complex total(static_cast<mpfr_prec_t>(wp + 64));
    for (auto& sl : slots) {
        Real accv(wp);
        accv.set(sl.acc);
        total += tab.val[sl.k] * (sl.sin_phi * accv);
    }
    SeriesSum out;
    out.value = Complex(Real(wp), Real(wp));
    out.value.re().set(total.re());
    out.value.im().set(total.im());
    out.terms = used;
    out.next_term_log2 = next_term_log2(log2_C, p, c, N);
    return out;
}

SeriesSum trig_kernel_series_even(const PeriodicFunction& g, long p, const Real& rate,
                                  long forced_terms, double log2_target,
                                  const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    const double c = rate.to_double();
    ComplexTable tab = complex_table(g, ctx);
    const double log2_C = std::log2(tab.abs_sum) + 2.0 - 2.0 * log2_1m_exp(c);

    const long N = forced_terms > 0 ? forced_terms : series_length(log2_C, p, c, log2_target);
    const long m = static_cast<long>(g.period());
    const Real pi = pi_value(ctx);

    struct Slot {
        std::size_t k;
        Real one_m_cos; // 1 - cos(phi_k)
        Real acc;
    };
    std::vector<Slot> slots;
    for (long k = 0; k < m; ++k) {
        if (!tab.nonzero[static_cast<std::size_t>(k)]) continue;
        Real theta = pi * Real::of(Rational(2 * k, m), wp);
        Real halfsin = sin(ldexp(theta, -1));
        slots.push_back(Slot{static_cast<std::size_t>(k), ldexp(halfsin * halfsin, 1),
                             Real(static_cast<mpfr_prec_t>(wp + 64))});
    }

    long used = 0;
    Real np(wp), h(wp), u(wp), t(wp), d(wp), theta_n(wp);
    const Real half_rate = ldexp(rate, -1);
    for (long n = 1; n <= N && !slots.empty(); ++n) {
        mpfr_mul_si(theta_n.raw(), rate.raw(), n, MPFR_RNDN);
        mpfr_mul_si(h.raw(), half_rate.raw(), n, MPFR_RNDN);
        mpfr_sinh(h.raw(), h.raw(), MPFR_RNDN);
        mpfr_sqr(h.raw(), h.raw(), MPFR_RNDN);
        mpfr_mul_2si(h.raw(), h.raw(), 1, MPFR_RNDN); // cosh(theta_n) - 1
        mpfr_neg(u.raw(), theta_n.raw(), MPFR_RNDN);
        mpfr_expm1(u.raw(), u.raw(), MPFR_RNDN);
        mpfr_neg(u.raw(), u.raw(), MPFR_RNDN); // 1 - e^{-theta_n}
        mpfr_ui_pow_ui(np.raw(), static_cast<unsigned long>(n),
                       static_cast<unsigned long>(p), MPFR_RNDN);
        for (auto& sl : slots) {
            // numer = (cos phi - e^{-theta}) = u - (1 - cos phi)
            mpfr_sub(t.raw(), u.raw(), sl.one_m_cos.raw(), MPFR_RNDN);
            mpfr_add(d.raw(), h.raw(), sl.one_m_cos.raw(), MPFR_RNDN);
            mpfr_mul(d.raw(), d.raw(), np.raw(), MPFR_RNDN);
            mpfr_div(t.raw(), t.raw(), d.raw(), MPFR_RNDN);
            mpfr_add(sl.acc.raw(), sl.acc.raw(), t.raw(), MPFR_RNDN);
            ++used;
        }
    }

    Complex total(static_cast<mpfr_prec_t>(wp + 64));
    for (auto& sl : slots) {
        Real accv(wp);
        accv.set(sl.acc);
        total += tab.val[sl.k] * accv;
    }
    SeriesSum out;
    out.value = Complex(Real(wp), Real(wp));
    out.value.re().set(total.re());
    out.value.im().set(total.im());
    out.terms = used;
    out.next_term_log2 = next_term_log2(log2_C, p, c, N);
    return out;
}

} // namespace detail

using detail::exp_kernel_series;
using detail::log2_trunc_target;
using detail::omega_kernel_series;
using detail::series_length;
using detail::trig_kernel_series_even;
using detail::trig_kernel_series_odd;

AccelParams AccelParams::make(const Real& alpha, long q, const PrecisionContext& ctx,
                              long n_terms) {
    if (!(alpha.cmp(0) > 0) || !alpha.is_finite())
        throw invalid_argument_error("alpha must be a positive real");
    AccelParams p;
    const Real pi = pi_value(ctx);
    Real a(ctx.work_bits());
    a.set(alpha);
    p.alpha = a;
    p.beta = pi * pi / a;
    p.q = q;
    p.n_terms = n_terms;
    return p;
}

AccelParams AccelParams::for_period(unsigned long m, long q, const PrecisionContext& ctx,
                                    long n_terms) {
    const Real pi = pi_value(ctx);
    return make(pi / sqrt(Real::of(static_cast<long>(m), ctx.work_bits())), q, ctx, n_terms);
}

namespace {

bool values_all_real(const PeriodicFunction& g, const PrecisionContext& ctx) {
    for (long k = 0; k < static_cast<long>(g.period()); ++k) {
        if (g.exact()) {
            if (!g.exact_value(k).is_real()) return false;
        } else if (!g.value(k, ctx).im().is_zero()) {
            return false;
        }
    }
    return true;
}

Real rational_coeff(const Rational& r, const PrecisionContext& ctx) {
    return Real::of(r, ctx.work_bits());
}

// In-place j-sum shared by the two solvers:
//   sum_j (-1)^{j+1} alpha^{j+e_a} beta^{-j} zeta(2j) L(arg_max - 2j, g)
// with e_a = -q-1/2 (odd case, arg_max = 2q+1) or -q-1 (even, arg_max = 2q+2).
Complex closed_j_sum(const PeriodicFunction& g, long q, long j_max, const Real& e_alpha_base,
                     const AccelParams& params, const PrecisionContext& ctx, bool odd_case) {
    Complex total(ctx.work_bits());
    for (long j = 0; j <= j_max; ++j) {
        const long arg = odd_case ? 2 * q - 2 * j + 1 : 2 * q - 2 * j + 2;
        Complex lv = l_closed_complex(arg, g, ctx);
        Real coef = pow_si(params.alpha, j) * e_alpha_base * pow_si(params.beta, -j) *
                    zeta_even(j, ctx);
        if (j % 2 == 0) coef.negate(); // (-1)^{j+1}
        total += lv * coef;
    }
    return total;
}

} // namespace

MethodReport zeta_odd_ramanujan(long q, const AccelParams& params,
                                const PrecisionContext& ctx) {
    if (q < 1) throw invalid_argument_error("zeta_odd_ramanujan needs q >= 1");
    const mpfr_prec_t wp = ctx.work_bits();
    const Real& alpha = params.alpha;
    const Real& beta = params.beta;

    const Real a_pow = pow_si(alpha, -q);
    Real b_pow = pow_si(beta, -q);
    if (q % 2 == 1) b_pow.negate(); // (-beta)^{-q}

    Real c = ldexp(a_pow - b_pow, -1);
    Real threshold = ldexp(abs(a_pow), -static_cast<long>(ctx.guard_bits));
    if (!(abs(c) > threshold))
        throw degenerate_parameters_error(
            "alpha^{-q} - (-beta)^{-q} vanishes; pick different alpha (q even, alpha = beta "
            "degenerates)");

    const double target = log2_trunc_target(ctx, 2);
    PeriodicFunction one = PeriodicFunction::constant_one();
    auto Sa = exp_kernel_series(one, 2 * q + 1, alpha, params.n_terms, target, ctx);
    auto Sb = exp_kernel_series(one, 2 * q + 1, beta, params.n_terms, target, ctx);

    // 2^{2q} sum_{k=0}^{q+1} (-1)^{k+1} B_{2k} B_{2q+2-2k} / ((2k)! (2q+2-2k)!)
    //        * alpha^{q+1-k} beta^k
    Real bsum(wp);
    for (long k = 0; k <= q + 1; ++k) {
        Rational r = bernoulli_number(static_cast<unsigned long>(2 * k)) *
                     bernoulli_number(static_cast<unsigned long>(2 * q + 2 - 2 * k)) /
                     (Rational(Integer::factorial(static_cast<unsigned long>(2 * k))) *
                      Rational(Integer::factorial(static_cast<unsigned long>(2 * q + 2 - 2 * k))));
        if (k % 2 == 0) r = -r; // (-1)^{k+1}
        bsum += rational_coeff(r, ctx) * pow_si(alpha, q + 1 - k) * pow_si(beta, k);
    }
    bsum = ldexp(bsum, 2 * q);

    Real z = (b_pow * Sb.value.re() - a_pow * Sa.value.re() + bsum) / c;

    MethodReport rep;
    rep.value = Complex::from_real(std::move(z));
    rep.terms_used = Sa.terms + Sb.terms;
    rep.params = params;
    rep.method = "ramanujan";
    return rep;
}

MethodReport zeta_odd_ramanujan(long q, const PrecisionContext& ctx) {
    const Real pi = pi_value(ctx);
    // alpha = beta = pi is the fastest choice but degenerates for even q.
    Real alpha = (q % 2 == 1) ? pi : ldexp(pi, -1);
    return zeta_odd_ramanujan(q, AccelParams::make(alpha, q, ctx), ctx);
}

MethodReport solve_odd_g(long q, const PeriodicFunction& g, const AccelParams& params,
                         const PrecisionContext& ctx, SolveRoute route) {
    const mpfr_prec_t wp = ctx.work_bits();
    if (q < 1) throw invalid_argument_error("solve_odd_g needs q >= 1");
    if (g.is_identically_zero(ctx)) {
        MethodReport rep;
        rep.value = Complex(wp);
        rep.terms_used = 1;
        rep.params = params;
        rep.method = "accel-odd";
        return rep;
    }
    if (!g.is_odd(ctx)) throw parity_error("solve_odd_g requires an odd function");

    const long m = static_cast<long>(g.period());
    const Real& alpha = params.alpha;
    const Real& beta = params.beta;
    const double target = log2_trunc_target(ctx, 2);

    auto S = exp_kernel_series(g, 2 * q, alpha, params.n_terms, target, ctx);

    const Real sqrt_alpha = sqrt(alpha);
    const Real e_alpha_base = pow_si(alpha, -q) / sqrt_alpha; // alpha^{-q-1/2}
    Complex J = closed_j_sum(g, q, q, e_alpha_base, params, ctx, /*odd_case=*/true);

    Real b_half = pow_si(beta, -q) * sqrt(beta); // beta^{-q+1/2}
    if (q % 2 == 1) b_half.negate();             // (-1)^q beta^{-q+1/2}
    const Real rate = beta * Real::of(Rational(2, m), wp);
    const Real inv_m = Real::of(Rational(1, m), wp);

    auto assemble = [&](const Complex& rhs1) {
        // L = 2 alpha^{q-1/2} (rhs1 + J) - 2 S
        Real lead = pow_si(alpha, q) / sqrt_alpha;
        Complex L = (rhs1 + J) * lead - S.value;
        return Complex(ldexp(L.re(), 1), ldexp(L.im(), 1));
    };

    const bool use_trig =
        route == SolveRoute::trig ||
        (route == SolveRoute::auto_pick && values_all_real(g, ctx)) ||
        route == SolveRoute::both;
    const bool use_omega = route == SolveRoute::omega ||
                           (route == SolveRoute::auto_pick && !values_all_real(g, ctx)) ||
                           route == SolveRoute::both;

    MethodReport rep;
    rep.params = params;
    rep.terms_used = S.terms;

    std::optional<Complex> v_omega, v_trig;
    if (use_omega) {
        auto O = omega_kernel_series(g, 2 * q, rate, /*skip_k0=*/true, params.n_terms,
                                     target, ctx);
        rep.terms_used += O.terms;
        Complex rhs1 = O.value.mul_i() * (b_half * inv_m);
        v_omega = assemble(rhs1);
    }
    if (use_trig) {
        auto T = trig_kernel_series_odd(g, 2 * q, rate, params.n_terms, target, ctx);
        rep.terms_used += T.terms;
        Complex rhs1 = T.value * ldexp(b_half * inv_m, -1);
        v_trig = assemble(rhs1);
    }

    if (v_omega && v_trig) rep.residual_check = (*v_omega - *v_trig).abs();
    const bool pick_trig =
        route == SolveRoute::trig ||
        (route != SolveRoute::omega && v_trig && (!v_omega || values_all_real(g, ctx)));
    if (pick_trig) {
        rep.value = *v_trig;
        rep.method = "accel-odd-trig";
    } else {
        rep.value = *v_omega;
        rep.method = "accel-odd-omega";
    }
    return rep;
}

MethodReport solve_even_g(long q, const PeriodicFunction& g, const AccelParams& params,
                          const PrecisionContext& ctx, SolveRoute route) {
    const mpfr_prec_t wp = ctx.work_bits();
    if (q < 0) throw invalid_argument_error("solve_even_g needs q >= 0");
    if (g.is_identically_zero(ctx)) {
        MethodReport rep;
        rep.value = Complex(wp);
        rep.terms_used = 1;
        rep.params = params;
        rep.method = "accel-even";
        return rep;
    }
    if (!g.is_even(ctx)) throw parity_error("solve_even_g requires an even function");

    const bool mean_zero = g.abscissa_class(ctx) != AbscissaClass::divergent_at_1;
    if (q == 0 && !mean_zero)
        throw invalid_argument_error("q = 0 requires zero mean (L(1,g) diverges otherwise)");

    const long m = static_cast<long>(g.period());
    const Real& alpha = params.alpha;
    const Real& beta = params.beta;
    const double target = log2_trunc_target(ctx, 2);

    auto S = exp_kernel_series(g, 2 * q + 1, alpha, params.n_terms, target, ctx);

    const Real e_alpha_base = pow_si(alpha, -q - 1); // alpha^{-q-1}
    Complex J = closed_j_sum(g, q, q + 1, e_alpha_base, params, ctx, /*odd_case=*/false);

    Real b_pow = pow_si(beta, -q);
    if (q % 2 == 1) b_pow.negate(); // (-beta)^{-q}
    const Real rate = beta * Real::of(Rational(2, m), wp);
    const Real inv_m = Real::of(Rational(1, m), wp);

    MethodReport rep;
    rep.params = params;

    // (1/2) M(g) zeta(2q+1), only needed when the mean is nonzero
    Complex half_m_zeta(wp);
    if (!mean_zero) {
        MethodReport zr = zeta_odd_ramanujan(
            q, AccelParams::make(ldexp(pi_value(ctx), -1), q, ctx, params.n_terms), ctx);
        rep.terms_used += zr.terms_used;
        half_m_zeta = g.mean(ctx) * ldexp(zr.value.re(), -1);
    }

    rep.terms_used += S.terms;

    auto assemble = [&](const Complex& rhs1) {
        Real lead = pow_si(alpha, q);
        Complex L = (rhs1 + J) * lead - S.value;
        return Complex(ldexp(L.re(), 1), ldexp(L.im(), 1));
    };

    const bool use_trig =
        route == SolveRoute::trig ||
        (route == SolveRoute::auto_pick && values_all_real(g, ctx)) ||
        route == SolveRoute::both;
    const bool use_omega = route == SolveRoute::omega ||
                           (route == SolveRoute::auto_pick && !values_all_real(g, ctx)) ||
                           route == SolveRoute::both;

    std::optional<Complex> v_omega, v_trig;
    if (use_omega) {
        auto O = omega_kernel_series(g, 2 * q + 1, rate, /*skip_k0=*/false, params.n_terms,
                                     target, ctx);
        rep.terms_used += O.terms;
        Complex rhs1 = (half_m_zeta + O.value * inv_m) * b_pow;
        v_omega = assemble(rhs1);
    }
    if (use_trig) {
        auto T = trig_kernel_series_even(g, 2 * q + 1, rate, params.n_terms, target, ctx);
        rep.terms_used += T.terms;
        Complex rhs1 = (half_m_zeta + T.value * ldexp(inv_m, -1)) * b_pow;
        v_trig = assemble(rhs1);
    }

    if (v_omega && v_trig) rep.residual_check = (*v_omega - *v_trig).abs();
    const bool pick_trig =
        route == SolveRoute::trig ||
        (route != SolveRoute::omega && v_trig && (!v_omega || values_all_real(g, ctx)));
    if (pick_trig) {
        rep.value = *v_trig;
        rep.method = "accel-even-trig";
    } else {
        rep.value = *v_omega;
        rep.method = "accel-even-omega";
    }
    return rep;
}

MethodReport l4_accel(long q, const AccelParams& params, const PrecisionContext& ctx) {
    if (q < 1) throw invalid_argument_error("l4_accel needs q >= 1");
    const mpfr_prec_t wp = ctx.work_bits();
    const Real& alpha = params.alpha;
    const Real& beta = params.beta;
    const double a_d = alpha.to_double();
    const double b_d = beta.to_double();
    const double target = log2_trunc_target(ctx, 2);

    // S_L = sum_{n>=0} (-1)^n (2n+1)^{-2q} / (e^{(4n+2) alpha} - 1)
    const double log2_CL = -2.0 * a_d * 1.4426950408889634 -
                           std::log2(-std::expm1(-2.0 * a_d));
    long NL = params.n_terms > 0 ? params.n_terms
                                 : series_length(log2_CL, 0.0, 4.0 * a_d, target);
    Real SL(static_cast<mpfr_prec_t>(wp + 64));
    {
        const Real g2 = exp(alpha * 2); // e^{2 alpha}
        const Real g4 = g2 * g2;        // growth per n
        Real E = g2;
        Real t(wp), u(wp);
        for (long n = 0; n < NL; ++n) {
            if (n > 0) E *= g4;
            mpfr_sub_ui(t.raw(), E.raw(), 1, MPFR_RNDN);
            mpfr_ui_pow_ui(u.raw(), static_cast<unsigned long>(2 * n + 1),
                           static_cast<unsigned long>(2 * q), MPFR_RNDN);
            mpfr_mul(t.raw(), t.raw(), u.raw(), MPFR_RNDN);
            mpfr_ui_div(t.raw(), 1, t.raw(), MPFR_RNDN);
            if (n % 2 == 1) t.negate();
            SL += t;
        }
    }

    // S_cosh = sum_{n>=1} n^{-2q} / cosh(n beta / 2)
    const double log2_Cc = 1.0;
    long Nc = params.n_terms > 0 ? params.n_terms
                                 : series_length(log2_Cc, 2.0 * q, b_d / 2.0, target);
    Real SC(static_cast<mpfr_prec_t>(wp + 64));
    {
        Real t(wp), u(wp);
        const Real half_beta = ldexp(beta, -1);
        for (long n = 1; n <= Nc; ++n) {
            mpfr_mul_si(t.raw(), half_beta.raw(), n, MPFR_RNDN);
            mpfr_sech(t.raw(), t.raw(), MPFR_RNDN);
            mpfr_ui_pow_ui(u.raw(), static_cast<unsigned long>(n),
                           static_cast<unsigned long>(2 * q), MPFR_RNDN);
            mpfr_div(t.raw(), t.raw(), u.raw(), MPFR_RNDN);
            SC += t;
        }
    }

    // 2^{2q-3} sum_{k=0}^{q} (-1)^k 2^{-4k} E_{2k} B_{2q-2k} /((2k)!(2q-2k)!)
    //          * alpha^{q-k} beta^{k+1/2}
    Real esum(wp);
    const Real sqrt_beta = sqrt(beta);
    for (long k = 0; k <= q; ++k) {
        Rational r = Rational(euler_number(static_cast<unsigned long>(2 * k))) *
                     bernoulli_number(static_cast<unsigned long>(2 * q - 2 * k)) /
                     (Rational(Integer::factorial(static_cast<unsigned long>(2 * k))) *
                      Rational(Integer::factorial(static_cast<unsigned long>(2 * q - 2 * k))));
        r = r / Rational(Integer::pow(Integer(2), static_cast<unsigned long>(4 * k)));
        if (k % 2 == 1) r = -r;
        esum += rational_coeff(r, ctx) * pow_si(alpha, q - k) * pow_si(beta, k);
    }
    esum *= sqrt_beta;
    esum = ldexp(esum, 2 * q - 3);

    Real b_half = pow_si(beta, -q) * sqrt_beta;
    if (q % 2 == 1) b_half.negate();

    Real SLw(wp), SCw(wp);
    SLw.set(SL);
    SCw.set(SC);
    Real rhs = ldexp(b_half * SCw, -2) + esum; // (1/4)(-1)^q beta^{-q+1/2} S_cosh + esum
    Real lead = pow_si(alpha, q) / sqrt(alpha);
    Real value = ldexp(lead * rhs - SLw, 1);

    MethodReport rep;
    rep.value = Complex::from_real(std::move(value));
    rep.terms_used = NL + Nc;
    rep.params = params;
    rep.method = "l4-accel";
    return rep;
}

MethodReport l4_accel(long q, const PrecisionContext& ctx) {
    return l4_accel(q, AccelParams::make(ldexp(pi_value(ctx), -1), q, ctx), ctx);
}

MethodReport catalan(const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    const Real pi = pi_value(ctx);
    const double pi_d = pi.to_double();
    const double target = log2_trunc_target(ctx, 2);

    // sum_{n>=0} (-1)^n (2n+1)^{-2} / (e^{(2n+1) pi} - 1)
    const double log2_C1 = -pi_d * 1.4426950408889634 - std::log2(-std::expm1(-2.0 * pi_d));
    const long N1 = series_length(log2_C1, 0.0, 2.0 * pi_d, target);
    Real S1(static_cast<mpfr_prec_t>(wp + 64));
    {
        const Real g2 = exp(pi * 2);
        Real E = exp(pi);
        Real t(wp), u(wp);
        for (long n = 0; n < N1; ++n) {
            if (n > 0) E *= g2;
            mpfr_sub_ui(t.raw(), E.raw(), 1, MPFR_RNDN);
            mpfr_ui_pow_ui(u.raw(), static_cast<unsigned long>(2 * n + 1), 2, MPFR_RNDN);
            mpfr_mul(t.raw(), t.raw(), u.raw(), MPFR_RNDN);
            mpfr_ui_div(t.raw(), 1, t.raw(), MPFR_RNDN);
            if (n % 2 == 1) t.negate();
            S1 += t;
        }
    }

    // sum_{n>=1} 1 / (n^2 cosh(pi n))
    const long N2 = series_length(1.0, 2.0, pi_d, target);
    Real S2(static_cast<mpfr_prec_t>(wp + 64));
    {
        Real t(wp), u(wp);
        for (long n = 1; n <= N2; ++n) {
            mpfr_mul_si(t.raw(), pi.raw(), n, MPFR_RNDN);
            mpfr_sech(t.raw(), t.raw(), MPFR_RNDN);
            mpfr_ui_pow_ui(u.raw(), static_cast<unsigned long>(n), 2, MPFR_RNDN);
            mpfr_div(t.raw(), t.raw(), u.raw(), MPFR_RNDN);
            S2 += t;
        }
    }

    Real S1w(wp), S2w(wp);
    S1w.set(S1);
    S2w.set(S2);
    Real value = pi * pi * Real::of(Rational(5, 48), wp) - ldexp(S1w, 1) - ldexp(S2w, -2);

    MethodReport rep;
    rep.value = Complex::from_real(std::move(value));
    rep.terms_used = N1 + N2;
    rep.params = AccelParams::make(ldexp(pi, -1), 1, ctx);
    rep.method = "catalan-series";
    return rep;
}

namespace {

void check_lerch_r(const Real& r) {
    if (!(r.cmp(0) > 0) || !(r.cmp(1) < 0))
        throw invalid_argument_error("lerch sums need 0 < r < 1");
}

// angle = 2 pi frac(n r); returns (sin, cos)
void reduced_sincos(Real& s, Real& c, long n, const Real& r, const Real& two_pi,
                    const PrecisionContext& ctx) {
    Real t(ctx.work_bits());
    mpfr_mul_si(t.raw(), r.raw(), n, MPFR_RNDN);
    Real f = t - floor(t);
    sin_cos(s, c, two_pi * f);
}

} // namespace

MethodReport lerch_cos(long q, const Real& r, const AccelParams& params,
                       const PrecisionContext& ctx) {
    if (q < 0) throw invalid_argument_error("lerch_cos needs q >= 0");
    check_lerch_r(r);
    const mpfr_prec_t wp = ctx.work_bits();
    const Real& alpha = params.alpha;
    const Real& beta = params.beta;
    const Real pi = pi_value(ctx);
    const Real two_pi = ldexp(pi, 1);
    const double a_d = alpha.to_double();
    const double b_d = beta.to_double();
    const double r_d = r.to_double();
    const long p = 2 * q + 1;
    const double target = log2_trunc_target(ctx, 3);

    // S1 = sum n^{-p} cos(2 pi n r) / (e^{2 n alpha} - 1)
    const long N1 = params.n_terms > 0
                        ? params.n_terms
                        : series_length(-std::log2(-std::expm1(-2.0 * a_d)), p, 2.0 * a_d,
                                        target);
    Real S1(static_cast<mpfr_prec_t>(wp + 64));
    {
        const Real growth = exp(alpha * 2);
        Real E = Real::of(1, wp);
        Real t(wp), u(wp), s(wp), c(wp);
        for (long n = 1; n <= N1; ++n) {
            E *= growth;
            reduced_sincos(s, c, n, r, two_pi, ctx);
            mpfr_sub_ui(t.raw(), E.raw(), 1, MPFR_RNDN);
            mpfr_ui_pow_ui(u.raw(), static_cast<unsigned long>(n),
                           static_cast<unsigned long>(p), MPFR_RNDN);
            mpfr_mul(t.raw(), t.raw(), u.raw(), MPFR_RNDN);
            mpfr_div(t.raw(), c.raw(), t.raw(), MPFR_RNDN);
            S1 += t;
        }
    }

    // S2 = sum n^{-p} e^{-2 n beta r}
    const double c2 = 2.0 * b_d * r_d;
    const long N2 = params.n_terms > 0 ? params.n_terms
                                       : series_length(0.0, p, c2, target);
    Real S2(static_cast<mpfr_prec_t>(wp + 64));
    {
        const Real decay = exp(-(beta * r) * 2);
        Real E = Real::of(1, wp);
        Real t(wp), u(wp);
        for (long n = 1; n <= N2; ++n) {
            E *= decay;
            mpfr_ui_pow_ui(u.raw(), static_cast<unsigned long>(n),
                           static_cast<unsigned long>(p), MPFR_RNDN);
            mpfr_div(t.raw(), E.raw(), u.raw(), MPFR_RNDN);
            S2 += t;
        }
    }

    // S3 = sum n^{-p} cosh(2 n beta r) / (e^{2 n beta} - 1)
    const double c3 = 2.0 * b_d * (1.0 - r_d);
    const long N3 = params.n_terms > 0
                        ? params.n_terms
                        : series_length(-std::log2(-std::expm1(-2.0 * b_d)), p, c3, target);
    Real S3(static_cast<mpfr_prec_t>(wp + 64));
    {
        const Real growth = exp(beta * 2);
        Real E = Real::of(1, wp);
        Real t(wp), u(wp), h(wp);
        const Real two_beta_r = ldexp(beta * r, 1);
        for (long n = 1; n <= N3; ++n) {
            E *= growth;
            mpfr_mul_si(h.raw(), two_beta_r.raw(), n, MPFR_RNDN);
            mpfr_cosh(h.raw(), h.raw(), MPFR_RNDN);
            mpfr_sub_ui(t.raw(), E.raw(), 1, MPFR_RNDN);
            mpfr_ui_pow_ui(u.raw(), static_cast<unsigned long>(n),
                           static_cast<unsigned long>(p), MPFR_RNDN);
            mpfr_mul(t.raw(), t.raw(), u.raw(), MPFR_RNDN);
            mpfr_div(t.raw(), h.raw(), t.raw(), MPFR_RNDN);
            S3 += t;
        }
    }

    // 2^{2q} sum_{k=0}^{q+1} (-1)^k B_{2k}(r) B_{2q+2-2k} /((2k)!(2q+2-2k)!)
    //        * alpha^{q+1-k} beta^k
    Real bsum(wp);
    for (long k = 0; k <= q + 1; ++k) {
        Real b2kr = eval_poly(bernoulli_polynomial(static_cast<unsigned long>(2 * k)), r, ctx);
        Rational fr = bernoulli_number(static_cast<unsigned long>(2 * q + 2 - 2 * k)) /
                      (Rational(Integer::factorial(static_cast<unsigned long>(2 * k))) *
                       Rational(Integer::factorial(static_cast<unsigned long>(2 * q + 2 - 2 * k))));
        Real term = b2kr * rational_coeff(fr, ctx) * pow_si(alpha, q + 1 - k) * pow_si(beta, k);
        if (k % 2 == 1) term.negate();
        bsum += term;
    }
    bsum = ldexp(bsum, 2 * q);

    Real b_pow = pow_si(beta, -q);
    if (q % 2 == 1) b_pow.negate();

    Real S1w(wp), S2w(wp), S3w(wp);
    S1w.set(S1);
    S2w.set(S2);
    S3w.set(S3);
    Real rhs = b_pow * (ldexp(S2w, -1) + S3w) - bsum;
    Real value = ldexp(pow_si(alpha, q) * rhs - S1w, 1);

    MethodReport rep;
    rep.value = Complex::from_real(std::move(value));
    rep.terms_used = N1 + N2 + N3;
    rep.params = params;
    rep.method = "lerch-cos";
    return rep;
}

MethodReport lerch_cos(long q, const Real& r, const PrecisionContext& ctx) {
    return lerch_cos(q, r, AccelParams::make(pi_value(ctx), q, ctx), ctx);
}

MethodReport lerch_sin(long q, const Real& r, const AccelParams& params,
                       const PrecisionContext& ctx) {
    if (q < 1) throw invalid_argument_error("lerch_sin needs q >= 1");
    check_lerch_r(r);
    const mpfr_prec_t wp = ctx.work_bits();
    const Real& alpha = params.alpha;
    const Real& beta = params.beta;
    const Real pi = pi_value(ctx);
    if (!(alpha > pi * r))
        throw degenerate_parameters_error("lerch_sin requires alpha > pi r");
    const Real two_pi = ldexp(pi, 1);
    const double a_d = alpha.to_double();
    const double b_d = beta.to_double();
    const double r_d = r.to_double();
    const long p = 2 * q;
    const double target = log2_trunc_target(ctx, 3);

    // S1 = sum n^{-p} sin(2 pi n r) / (e^{2 n alpha} - 1)
    const long N1 = params.n_terms > 0
                        ? params.n_terms
                        : series_length(-std::log2(-std::expm1(-2.0 * a_d)), p, 2.0 * a_d,
                                        target);
    Real S1(static_cast<mpfr_prec_t>(wp + 64));
    {
        const Real growth = exp(alpha * 2);
        Real E = Real::of(1, wp);
        Real t(wp), u(wp), s(wp), c(wp);
        for (long n = 1; n <= N1; ++n) {
            E *= growth;
            reduced_sincos(s, c, n, r, two_pi, ctx);
            mpfr_sub_ui(t.raw(), E.raw(), 1, MPFR_RNDN);
            mpfr_ui_pow_ui(u.raw(), static_cast<unsigned long>(n),
                           static_cast<unsigned long>(p), MPFR_RNDN);
            mpfr_mul(t.raw(), t.raw(), u.raw(), MPFR_RNDN);
            mpfr_div(t.raw(), s.raw(), t.raw(), MPFR_RNDN);
            S1 += t;
        }
    }

    // S2 = sum n^{-p} e^{-2 n beta r}
    const long N2 = params.n_terms > 0 ? params.n_terms
                                       : series_length(0.0, p, 2.0 * b_d * r_d, target);
    Real S2(static_cast<mpfr_prec_t>(wp + 64));
    {
        const Real decay = exp(-(beta * r) * 2);
        Real E = Real::of(1, wp);
        Real t(wp), u(wp);
        for (long n = 1; n <= N2; ++n) {
            E *= decay;
            mpfr_ui_pow_ui(u.raw(), static_cast<unsigned long>(n),
                           static_cast<unsigned long>(p), MPFR_RNDN);
            mpfr_div(t.raw(), E.raw(), u.raw(), MPFR_RNDN);
            S2 += t;
        }
    }

    // S3 = sum n^{-p} sinh(2 n beta r) / (e^{2 n beta} - 1)
    const double c3 = 2.0 * b_d * (1.0 - r_d);
    const long N3 = params.n_terms > 0
                        ? params.n_terms
                        : series_length(-1.0 - std::log2(-std::expm1(-2.0 * b_d)), p, c3,
                                        target);
    Real S3(static_cast<mpfr_prec_t>(wp + 64));
    {
        const Real growth = exp(beta * 2);
        Real E = Real::of(1, wp);
        Real t(wp), u(wp), h(wp);
        const Real two_beta_r = ldexp(beta * r, 1);
        for (long n = 1; n <= N3; ++n) {
            E *= growth;
            mpfr_mul_si(h.raw(), two_beta_r.raw(), n, MPFR_RNDN);
            mpfr_sinh(h.raw(), h.raw(), MPFR_RNDN);
            mpfr_sub_ui(t.raw(), E.raw(), 1, MPFR_RNDN);
            mpfr_ui_pow_ui(u.raw(), static_cast<unsigned long>(n),
                           static_cast<unsigned long>(p), MPFR_RNDN);
            mpfr_mul(t.raw(), t.raw(), u.raw(), MPFR_RNDN);
            mpfr_div(t.raw(), h.raw(), t.raw(), MPFR_RNDN);
            S3 += t;
        }
    }

    // 2^{2q-1} sum_{k=0}^{q} (-1)^k B_{2k+1}(r) B_{2q-2k} /((2k+1)!(2q-2k)!)
    //          * alpha^{q-k} beta^{k+1/2}
    Real bsum(wp);
    const Real sqrt_beta = sqrt(beta);
    for (long k = 0; k <= q; ++k) {
        Real bodd = eval_poly(bernoulli_polynomial(static_cast<unsigned long>(2 * k + 1)), r, ctx);
        Rational fr = bernoulli_number(static_cast<unsigned long>(2 * q - 2 * k)) /
                      (Rational(Integer::factorial(static_cast<unsigned long>(2 * k + 1))) *
                       Rational(Integer::factorial(static_cast<unsigned long>(2 * q - 2 * k))));
        Real term = bodd * rational_coeff(fr, ctx) * pow_si(alpha, q - k) * pow_si(beta, k);
        if (k % 2 == 1) term.negate();
        bsum += term;
    }
    bsum *= sqrt_beta;
    bsum = ldexp(bsum, 2 * q - 1);

    Real b_half = pow_si(beta, -q) * sqrt_beta;
    if (q % 2 == 1) b_half.negate(); // (-1)^q beta^{-q+1/2}

    Real S1w(wp), S2w(wp), S3w(wp);
    S1w.set(S1);
    S2w.set(S2);
    S3w.set(S3);
    // corrected form: beta side carries (1/2) S2 - S3
    Real rhs = b_half * (ldexp(S2w, -1) - S3w) - bsum;
    Real lead = pow_si(alpha, q) / sqrt(alpha);
    Real value = ldexp(lead * rhs - S1w, 1);

    MethodReport rep;
    rep.value = Complex::from_real(std::move(value));
    rep.terms_used = N1 + N2 + N3;
    rep.params = params;
    rep.method = "lerch-sin";
    return rep;
}

MethodReport lerch_sin(long q, const Real& r, const PrecisionContext& ctx) {
    return lerch_sin(q, r, AccelParams::make(pi_value(ctx), q, ctx), ctx);
}

MethodReport evaluate(long s, const PeriodicFunction& g, const EvaluateConfig& config,
                      const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    if (s < 1) throw invalid_argument_error("evaluate needs integer s >= 1");

    const AbscissaClass cls = g.abscissa_class(ctx);
    if (cls == AbscissaClass::zero_function) {
        MethodReport rep;
        rep.value = Complex(wp);
        rep.terms_used = 1;
        rep.params = AccelParams::for_period(g.period(), 0, ctx);
        rep.method = "zero";
        return rep;
    }
    if (s == 1 && cls == AbscissaClass::divergent_at_1)
        throw divergent_series_error("L(1,g) diverges: g has nonzero mean");

    ParitySplit split = parity_split(g);
    const bool s_even = (s % 2 == 0);

    Complex total(wp);
    long terms = 1;
    bool used_closed = false, used_accel = false;

    Real alpha = config.alpha ? *config.alpha
                              : pi_value(ctx) / sqrt(Real::of(static_cast<long>(g.period()), wp));

    if (!split.even_part.is_identically_zero(ctx)) {
        if (s_even) {
            total += l_closed_complex(s, split.even_part, ctx);
            used_closed = true;
        } else {
            const long q = (s - 1) / 2;
            MethodReport r = solve_even_g(q, split.even_part,
                                          AccelParams::make(alpha, q, ctx, config.n_terms),
                                          ctx, config.route);
            total += r.value;
            terms += r.terms_used;
            used_accel = true;
        }
    }
    if (!split.odd_part.is_identically_zero(ctx)) {
        if (!s_even) {
            total += l_closed_complex(s, split.odd_part, ctx);
            used_closed = true;
        } else {
            const long q = s / 2;
            MethodReport r = solve_odd_g(q, split.odd_part,
                                         AccelParams::make(alpha, q, ctx, config.n_terms),
                                         ctx, config.route);
            total += r.value;
            terms += r.terms_used;
            used_accel = true;
        }
    }

    MethodReport rep;
    rep.value = std::move(total);
    rep.terms_used = terms;
    rep.params = AccelParams::make(alpha, s / 2, ctx, config.n_terms);
    rep.method = used_closed && used_accel ? "closed+accel"
                 : used_accel             ? "accel"
                                          : "closed";
    return rep;
}

} // namespace periodica
