#include "direct.hpp"

#include <cmath>
#include <vector>

#include "errors.hpp"

namespace periodica {

namespace {

struct ValueTable {
    std::vector<Real> re, im;
    std::vector<bool> nonzero;
    bool all_real = true;
};

ValueTable make_table(const PeriodicFunction& g, const PrecisionContext& ctx) {
    ValueTable t;
    const unsigned long m = g.period();
    t.re.reserve(m);
    t.im.reserve(m);
    t.nonzero.reserve(m);
    for (unsigned long k = 0; k < m; ++k) {
        Complex v = g.value(static_cast<long>(k), ctx);
        bool nz = g.exact() ? !g.exact_value(static_cast<long>(k)).is_zero() : !v.is_zero();
        if (!v.im().is_zero()) t.all_real = false;
        t.re.push_back(v.re());
        t.im.push_back(v.im());
        t.nonzero.push_back(nz);
    }
    return t;
}

} // namespace

Evaluation l_direct(long s, const PeriodicFunction& g, long n_terms,
                    const PrecisionContext& ctx) {
    return l_direct(Real::of(s, ctx.work_bits()), g, n_terms, ctx);
}

Evaluation l_direct(const Real& s, const PeriodicFunction& g, long n_terms,
                    const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    if (n_terms < 1) throw invalid_argument_error("l_direct needs n_terms >= 1");

    const AbscissaClass cls = g.abscissa_class(ctx);
    if (cls == AbscissaClass::zero_function)
        return {Complex(wp), Real(wp), true, 0};

    if (s.cmp(0) <= 0) throw invalid_argument_error("l_direct requires s > 0");
    if (cls == AbscissaClass::divergent_at_1 && s.cmp(1) <= 0)
        throw divergent_series_error("L(s,g) diverges: nonzero mean and s <= 1");

    const long m = static_cast<long>(g.period());
    long N = n_terms;
    const bool blocks = (cls == AbscissaClass::conditional);
    if (blocks) {
        if (N < m) N = m;
        N -= N % m;
    }

    const bool int_s = mpfr_integer_p(s.raw()) && mpfr_fits_slong_p(s.raw(), MPFR_RNDN);
    const long s_int = int_s ? mpfr_get_si(s.raw(), MPFR_RNDN) : 0;
    const Real minus_s = -s;

    ValueTable tab = make_table(g, ctx);
    const mpfr_prec_t acc_prec = wp + 64; // widened accumulator
    Real acc_re(acc_prec), acc_im(acc_prec);
    Real t(wp), u(wp);

    for (long n = 1; n <= N; ++n) {
        const std::size_t idx = static_cast<std::size_t>(n % m);
        if (!tab.nonzero[idx]) continue;
        if (int_s && s_int > 0) {
            mpfr_ui_pow_ui(t.raw(), static_cast<unsigned long>(n),
                           static_cast<unsigned long>(s_int), MPFR_RNDN);
            mpfr_div(u.raw(), tab.re[idx].raw(), t.raw(), MPFR_RNDN);
            mpfr_add(acc_re.raw(), acc_re.raw(), u.raw(), MPFR_RNDN);
            if (!tab.all_real) {
                mpfr_div(u.raw(), tab.im[idx].raw(), t.raw(), MPFR_RNDN);
                mpfr_add(acc_im.raw(), acc_im.raw(), u.raw(), MPFR_RNDN);
            }
        } else {
            mpfr_ui_pow(t.raw(), static_cast<unsigned long>(n), minus_s.raw(), MPFR_RNDN);
            mpfr_mul(u.raw(), tab.re[idx].raw(), t.raw(), MPFR_RNDN);
            mpfr_add(acc_re.raw(), acc_re.raw(), u.raw(), MPFR_RNDN);
            if (!tab.all_real) {
                mpfr_mul(u.raw(), tab.im[idx].raw(), t.raw(), MPFR_RNDN);
                mpfr_add(acc_im.raw(), acc_im.raw(), u.raw(), MPFR_RNDN);
            }
        }
    }

    Real vr(wp), vi(wp);
    mpfr_set(vr.raw(), acc_re.raw(), MPFR_RNDN);
    mpfr_set(vi.raw(), acc_im.raw(), MPFR_RNDN);

    const Real maxg = Real::of(g.max_abs_upper(), wp);
    const Real Nr = Real::of(N, wp);
    Evaluation ev;
    ev.value = Complex(std::move(vr), std::move(vi));
    ev.terms_used = N;
    if (blocks) {
        ev.error_bound = maxg * Real::of(m, wp) * pow(Nr, minus_s);
        ev.rigorous = false;
    } else {
        ev.error_bound = maxg * pow(Nr, Real::of(1, wp) - s) / (s - 1);
        ev.rigorous = true;
    }
    return ev;
}

Evaluation t_direct(const Real& s, const Real& y, const PeriodicFunction& f,
                    long n_terms, const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    if (n_terms < 1) throw invalid_argument_error("t_direct needs n_terms >= 1");

    const AbscissaClass cls = f.abscissa_class(ctx);
    if (cls == AbscissaClass::zero_function)
        return {Complex(wp), Real(wp), true, 0};

    if (cls == AbscissaClass::divergent_at_1 && s.cmp(-1) <= 0)
        throw invalid_argument_error("t_direct requires s > sigma_f - 2");
    if (cls == AbscissaClass::conditional && s.cmp(-2) <= 0)
        throw invalid_argument_error("t_direct requires s > sigma_f - 2");

    const long m = static_cast<long>(f.period());
    long N = n_terms;
    const bool blocks = (cls == AbscissaClass::conditional);
    if (blocks) {
        if (N < m) N = m;
        N -= N % m;
    }

    const bool int_s = mpfr_integer_p(s.raw()) && mpfr_fits_slong_p(s.raw(), MPFR_RNDN);
    const long s_int = int_s ? mpfr_get_si(s.raw(), MPFR_RNDN) : 0;
    const Real minus_s = -s;
    const Real y2 = y * y;

    ValueTable tab = make_table(f, ctx);
    const mpfr_prec_t acc_prec = wp + 64;
    Real acc_re(acc_prec), acc_im(acc_prec);
    Real t(wp), d(wp), u(wp);

    for (long k = 1; k <= N; ++k) {
        const std::size_t idx = static_cast<std::size_t>(k % m);
        if (!tab.nonzero[idx]) continue;
        // d = k^2 + y^2
        mpfr_set_ui(d.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_sqr(d.raw(), d.raw(), MPFR_RNDN);
        mpfr_add(d.raw(), d.raw(), y2.raw(), MPFR_RNDN);
        // t = k^{-s} / d
        if (int_s) {
            if (s_int >= 0) {
                mpfr_ui_pow_ui(t.raw(), static_cast<unsigned long>(k),
                               static_cast<unsigned long>(s_int), MPFR_RNDN);
                mpfr_mul(d.raw(), d.raw(), t.raw(), MPFR_RNDN);
                mpfr_ui_div(t.raw(), 1, d.raw(), MPFR_RNDN);
            } else {
                mpfr_ui_pow_ui(t.raw(), static_cast<unsigned long>(k),
                               static_cast<unsigned long>(-s_int), MPFR_RNDN);
                mpfr_div(t.raw(), t.raw(), d.raw(), MPFR_RNDN);
            }
        } else {
            mpfr_ui_pow(t.raw(), static_cast<unsigned long>(k), minus_s.raw(), MPFR_RNDN);
            mpfr_div(t.raw(), t.raw(), d.raw(), MPFR_RNDN);
        }
        mpfr_mul(u.raw(), tab.re[idx].raw(), t.raw(), MPFR_RNDN);
        mpfr_add(acc_re.raw(), acc_re.raw(), u.raw(), MPFR_RNDN);
        if (!tab.all_real) {
            mpfr_mul(u.raw(), tab.im[idx].raw(), t.raw(), MPFR_RNDN);
            mpfr_add(acc_im.raw(), acc_im.raw(), u.raw(), MPFR_RNDN);
        }
    }

    Real vr(wp), vi(wp);
    mpfr_set(vr.raw(), acc_re.raw(), MPFR_RNDN);
    mpfr_set(vi.raw(), acc_im.raw(), MPFR_RNDN);

    const Real maxf = Real::of(f.max_abs_upper(), wp);
    const Real Nr = Real::of(N, wp);
    Evaluation ev;
    ev.value = Complex(std::move(vr), std::move(vi));
    ev.terms_used = N;
    if (blocks) {
        // |tail| <= max|f| m N^{-s-2} (|s|+2)/(s+2), from one Abel step per block
        Real c = (abs(s) + 2) / (s + 2);
        ev.error_bound = maxf * Real::of(m, wp) * pow(Nr, minus_s - 2) * c;
        ev.rigorous = false;
    } else {
        ev.error_bound = maxf * pow(Nr, minus_s - 1) / (s + 1);
        ev.rigorous = true;
    }
    return ev;
}

Evaluation pv_sum(const PeriodicFunction& g, const Real& y, long n_pairs,
                  const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    if (y.cmp(0) <= 0) throw invalid_argument_error("pv_sum requires y > 0");
    if (n_pairs < 1) throw invalid_argument_error("pv_sum needs n_pairs >= 1");

    if (g.is_identically_zero(ctx)) return {Complex(wp), Real(wp), true, 0};

    const long m = static_cast<long>(g.period());
    long N = n_pairs;
    if (N < m) N = m;
    N -= N % m;

    ValueTable tab = make_table(g, ctx);
    const Real y2 = y * y;
    const mpfr_prec_t acc_prec = wp + 64;
    Real acc_re(acc_prec), acc_im(acc_prec);
    Real d(wp), u(wp), pr(wp), pi_(wp);

    for (long k = 1; k <= N; ++k) {
        const std::size_t ip = static_cast<std::size_t>(k % m);
        const std::size_t in = static_cast<std::size_t>((m - (k % m)) % m);
        if (!tab.nonzero[ip] && !tab.nonzero[in]) continue;
        // pair k, -k: [ y (g(k)+g(-k)) + i k (g(-k)-g(k)) ] / (y^2 + k^2)
        mpfr_set_ui(d.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_sqr(d.raw(), d.raw(), MPFR_RNDN);
        mpfr_add(d.raw(), d.raw(), y2.raw(), MPFR_RNDN);

        // real part: y*(re_p + re_n) - k*(im_n - im_p) ... derived below
        // (a+bi)/(y+ik) + (c+di)/(y-ik)
        //   = [ (a+c)y + (b-d)k + i( (b+d)y + (c-a)k ) ] / (y^2+k^2)
        const Real& are = tab.re[ip];
        const Real& aim = tab.im[ip];
        const Real& cre = tab.re[in];
        const Real& cim = tab.im[in];
        Real kr = Real::of(k, wp);
        mpfr_add(pr.raw(), are.raw(), cre.raw(), MPFR_RNDN);
        mpfr_mul(pr.raw(), pr.raw(), y.raw(), MPFR_RNDN);
        mpfr_sub(u.raw(), aim.raw(), cim.raw(), MPFR_RNDN);
        mpfr_mul(u.raw(), u.raw(), kr.raw(), MPFR_RNDN);
        mpfr_add(pr.raw(), pr.raw(), u.raw(), MPFR_RNDN);
        mpfr_div(pr.raw(), pr.raw(), d.raw(), MPFR_RNDN);
        mpfr_add(acc_re.raw(), acc_re.raw(), pr.raw(), MPFR_RNDN);

        mpfr_add(pi_.raw(), aim.raw(), cim.raw(), MPFR_RNDN);
        mpfr_mul(pi_.raw(), pi_.raw(), y.raw(), MPFR_RNDN);
        mpfr_sub(u.raw(), cre.raw(), are.raw(), MPFR_RNDN);
        mpfr_mul(u.raw(), u.raw(), kr.raw(), MPFR_RNDN);
        mpfr_add(pi_.raw(), pi_.raw(), u.raw(), MPFR_RNDN);
        mpfr_div(pi_.raw(), pi_.raw(), d.raw(), MPFR_RNDN);
        mpfr_add(acc_im.raw(), acc_im.raw(), pi_.raw(), MPFR_RNDN);
    }

    Real vr(wp), vi(wp);
    mpfr_set(vr.raw(), acc_re.raw(), MPFR_RNDN);
    mpfr_set(vi.raw(), acc_im.raw(), MPFR_RNDN);

    const Real maxg = Real::of(g.max_abs_upper(), wp);
    Evaluation ev;
    ev.value = Complex(std::move(vr), std::move(vi));
    ev.terms_used = N;
    ev.error_bound = maxg * (y * 2 + Real::of(6 * m, wp)) / Real::of(N, wp);
    ev.rigorous = false;
    return ev;
}

} // namespace periodica
