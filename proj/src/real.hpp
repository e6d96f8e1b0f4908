#pragma once

// Arbitrary-precision real numbers on top of MPFR, bound to an explicit
// precision context.  A context carries the user-visible precision plus
// guard bits; all arithmetic runs at precision_bits + guard_bits and the
// guard bits absorb rounding accumulation (validated by the
// precision-doubling regression tests rather than by interval arithmetic).

#include <mpfr.h>

#include <string>

#include "rational.hpp"

namespace periodica {

struct PrecisionContext {
    long precision_bits = 256;
    long guard_bits = 32;

    PrecisionContext() = default;
    PrecisionContext(long precision, long guard = 32);

    long work_bits() const { return precision_bits + guard_bits; }
    // Digits the guard-bit policy can defend in printed output.
    long reliable_digits() const;
};

class Real {
  public:
    explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long v, mpfr_prec_t prec);
    static Real of(int v, mpfr_prec_t prec) { return of(static_cast<long>(v), prec); }
    static Real of(double v, mpfr_prec_t prec);
    static Real of(const Integer& v, mpfr_prec_t prec);
    static Real of(const Rational& v, mpfr_prec_t prec);
    // Parses a decimal string ("1.5", "-3e-2", ...); throws parse_error.
    static Real parse(const std::string& decimal, mpfr_prec_t prec);
    static Real exp2i(long e, mpfr_prec_t prec); // 2^e, exact
    static Real exp2d(double e, mpfr_prec_t prec); // 2^e from a log2 estimate

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(long o) const { return mpfr_cmp_si(v_, o); }
    bool operator==(const Real& o) const { return mpfr_equal_p(v_, o.v_) != 0; }
    bool operator<(const Real& o) const { return mpfr_less_p(v_, o.v_) != 0; }
    bool operator<=(const Real& o) const { return mpfr_lessequal_p(v_, o.v_) != 0; }
    bool operator>(const Real& o) const { return mpfr_greater_p(v_, o.v_) != 0; }
    bool operator>=(const Real& o) const { return mpfr_greaterequal_p(v_, o.v_) != 0; }
    bool identical(const Real& o) const; // bit-level equality (incl. precision)

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Exponent e with |x| in [2^(e-1), 2^e); 0 for zero.
    long exp2_bound() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

    Real operator-() const;
    Real operator+(const Real& o) const;
    Real operator-(const Real& o) const;
    Real operator*(const Real& o) const;
    Real operator/(const Real& o) const;
    Real operator+(long o) const;
    Real operator-(long o) const;
    Real operator*(long o) const;
    Real operator/(long o) const;

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

    Real& negate() { mpfr_neg(v_, v_, MPFR_RNDN); return *this; }
    Real& set(const Real& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
    Real& set(long o) { mpfr_set_si(v_, o, MPFR_RNDN); return *this; }
    Real& set_zero() { mpfr_set_zero(v_, 1); return *this; }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    mpfr_t v_;
};

// Free functions; results carry max(operand precisions) unless noted.
Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
void sin_cos(Real& s, Real& c, const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real sech(const Real& x);
Real coth(const Real& x);
Real atan(const Real& x);
Real pow(const Real& base, const Real& e);
Real pow_si(const Real& base, long e);
Real ui_pow_ui(unsigned long base, unsigned long e, mpfr_prec_t prec);
Real floor(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real ldexp(const Real& x, long e); // x * 2^e

Real pi_value(const PrecisionContext& ctx);
Real to_real(const Rational& q, const PrecisionContext& ctx);
Real eval_poly(const RationalPolynomial& p, const Real& x, const PrecisionContext& ctx);
// 2^(-precision_bits + guard_bits): the near-zero threshold for inexact data.
Real near_zero_threshold(const PrecisionContext& ctx);

} // namespace periodica
