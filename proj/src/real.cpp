#include "real.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace periodica {

PrecisionContext::PrecisionContext(long precision, long guard)
    : precision_bits(precision), guard_bits(guard) {
    if (precision < 64) throw invalid_argument_error("precision must be at least 64 bits");
    if (guard < 16) throw invalid_argument_error("guard bits must be at least 16");
}

long PrecisionContext::reliable_digits() const {
    const double log10_2 = 0.30102999566398119521;
    return static_cast<long>(std::floor(static_cast<double>(precision_bits - guard_bits) * log10_2));
}

Real Real::of(long v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::of(double v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::of(const Integer& v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, v.raw(), MPFR_RNDN);
    return r;
}

Real Real::of(const Rational& v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, v.raw(), MPFR_RNDN);
    return r;
}

Real Real::parse(const std::string& decimal, mpfr_prec_t prec) {
    Real r(prec);
    char* end = nullptr;
    int rc = mpfr_strtofr(r.v_, decimal.c_str(), &end, 10, MPFR_RNDN);
    (void)rc;
    if (end == decimal.c_str() || *end != '\0' || mpfr_nan_p(r.v_))
        throw parse_error("not a decimal number: '" + decimal + "'");
    return r;
}

Real Real::exp2i(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, 1, MPFR_RNDN);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

Real Real::exp2d(double e, mpfr_prec_t prec) {
    double ip = std::floor(e);
    double frac = e - ip;
    Real r(prec);
    mpfr_set_d(r.v_, std::exp2(frac), MPFR_RNDN);
    mpfr_mul_2si(r.v_, r.v_, static_cast<long>(ip), MPFR_RNDN);
    return r;
}

bool Real::identical(const Real& o) const {
    if (prec() != o.prec()) return false;
    if (is_nan() || o.is_nan()) return false;
    if (is_zero() && o.is_zero()) return true;
    return mpfr_equal_p(v_, o.v_) != 0 && mpfr_get_exp(v_) == mpfr_get_exp(o.v_);
}

namespace {
mpfr_prec_t join(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }
} // namespace

Real Real::operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define PERIODICA_BINOP(op, fn)                          \
    Real Real::operator op(const Real& o) const {        \
        Real r(join(*this, o));                          \
        fn(r.raw(), v_, o.v_, MPFR_RNDN);                \
        return r;                                        \
    }

PERIODICA_BINOP(+, mpfr_add)
PERIODICA_BINOP(-, mpfr_sub)
PERIODICA_BINOP(*, mpfr_mul)
PERIODICA_BINOP(/, mpfr_div)
#undef PERIODICA_BINOP

#define PERIODICA_BINOP_SI(op, fn)                \
    Real Real::operator op(long o) const {        \
        Real r(prec());                           \
        fn(r.raw(), v_, o, MPFR_RNDN);            \
        return r;                                 \
    }

PERIODICA_BINOP_SI(+, mpfr_add_si)
PERIODICA_BINOP_SI(-, mpfr_sub_si)
PERIODICA_BINOP_SI(*, mpfr_mul_si)
PERIODICA_BINOP_SI(/, mpfr_div_si)
#undef PERIODICA_BINOP_SI

#define PERIODICA_UNARY(name, fn)          \
    Real name(const Real& x) {             \
        Real r(x.prec());                  \
        fn(r.raw(), x.raw(), MPFR_RNDN);   \
        return r;                          \
    }

PERIODICA_UNARY(abs, mpfr_abs)
PERIODICA_UNARY(sqrt, mpfr_sqrt)
PERIODICA_UNARY(exp, mpfr_exp)
PERIODICA_UNARY(expm1, mpfr_expm1)
PERIODICA_UNARY(log, mpfr_log)
PERIODICA_UNARY(sin, mpfr_sin)
PERIODICA_UNARY(cos, mpfr_cos)
PERIODICA_UNARY(sinh, mpfr_sinh)
PERIODICA_UNARY(cosh, mpfr_cosh)
PERIODICA_UNARY(sech, mpfr_sech)
PERIODICA_UNARY(coth, mpfr_coth)
PERIODICA_UNARY(atan, mpfr_atan)
#undef PERIODICA_UNARY

Real floor(const Real& x) {
    Real r(x.prec());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

void sin_cos(Real& s, Real& c, const Real& x) {
    mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
}

Real pow(const Real& base, const Real& e) {
    Real r(std::max(base.prec(), e.prec()));
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    return r;
}

Real pow_si(const Real& base, long e) {
    Real r(base.prec());
    mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
    return r;
}

Real ui_pow_ui(unsigned long base, unsigned long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_ui_pow_ui(r.raw(), base, e, MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

Real ldexp(const Real& x, long e) {
    Real r(x.prec());
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

Real pi_value(const PrecisionContext& ctx) {
    Real r(ctx.work_bits());
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real to_real(const Rational& q, const PrecisionContext& ctx) {
    return Real::of(q, ctx.work_bits());
}

Real eval_poly(const RationalPolynomial& p, const Real& x, const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_bits();
    Real acc(wp);
    for (long i = p.degree(); i >= 0; --i) {
        acc *= x;
        acc += Real::of(p.coeff(static_cast<std::size_t>(i)), wp);
    }
    return acc;
}

Real near_zero_threshold(const PrecisionContext& ctx) {
    return Real::exp2i(-ctx.precision_bits + ctx.guard_bits, ctx.work_bits());
}

} // namespace periodica
