#pragma once

// Complex arithmetic over Real.  Only what the series evaluators need:
// field operations, conjugation, modulus, unit-circle points and the
// hyperbolic cotangent of a complex argument.

#include "real.hpp"

namespace periodica {

class Complex {
  public:
    explicit Complex(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

    static Complex of(const GaussianRational& v, mpfr_prec_t prec) {
        return Complex(Real::of(v.re, prec), Real::of(v.im, prec));
    }
    static Complex of(long re, long im, mpfr_prec_t prec) {
        return Complex(Real::of(re, prec), Real::of(im, prec));
    }
    static Complex from_real(Real re) {
        Real im(re.prec());
        return Complex(std::move(re), std::move(im));
    }
    // exp(i*theta)
    static Complex unit(const Real& theta) {
        Real s(theta.prec()), c(theta.prec());
        sin_cos(s, c, theta);
        return Complex(std::move(c), std::move(s));
    }

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Real& re() { return re_; }
    Real& im() { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

    Complex conj() const { return Complex(re_, -im_); }
    Complex operator-() const { return Complex(-re_, -im_); }

    Complex operator+(const Complex& o) const { return Complex(re_ + o.re_, im_ + o.im_); }
    Complex operator-(const Complex& o) const { return Complex(re_ - o.re_, im_ - o.im_); }
    Complex operator*(const Complex& o) const {
        return Complex(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Complex operator*(const Real& s) const { return Complex(re_ * s, im_ * s); }
    Complex operator/(const Real& s) const { return Complex(re_ / s, im_ / s); }
    Complex operator/(const Complex& o) const {
        Real norm = o.re_ * o.re_ + o.im_ * o.im_;
        return Complex((re_ * o.re_ + im_ * o.im_) / norm,
                       (im_ * o.re_ - re_ * o.im_) / norm);
    }

    Complex& operator+=(const Complex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Complex& operator*=(const Real& s) {
        re_ *= s;
        im_ *= s;
        return *this;
    }

    // i * z
    Complex mul_i() const { return Complex(-im_, re_); }

    Real abs() const {
        Real r(std::max(re_.prec(), im_.prec()));
        mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
        return r;
    }

  private:
    Real re_;
    Real im_;
};

inline Complex operator*(const Real& s, const Complex& z) { return z * s; }

// coth(z) for complex z with Re(z) != 0 or Im(z) not a multiple of pi.
Complex coth(const Complex& z);

} // namespace periodica
