#pragma once

// Exact arbitrary-size integers, rationals, Gaussian rationals and
// polynomials with rational coefficients, built on GMP.  Everything here is
// a value type with exact arithmetic; nothing depends on a precision
// context.

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace periodica {

class Integer {
  public:
    Integer() { mpz_init(z_); }
    Integer(long v) { mpz_init_set_si(z_, v); }
    explicit Integer(const std::string& decimal);

    Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
    Integer(Integer&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Integer() { mpz_clear(z_); }

    static Integer binomial(unsigned long n, unsigned long k);
    static Integer factorial(unsigned long n);
    static Integer pow(const Integer& base, unsigned long e);

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sign() const { return mpz_sgn(z_); }
    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const { return mpz_get_si(z_); }

    Integer operator-() const;
    Integer operator+(const Integer& o) const;
    Integer operator-(const Integer& o) const;
    Integer operator*(const Integer& o) const;
    Integer& operator+=(const Integer& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Integer& operator-=(const Integer& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Integer& operator*=(const Integer& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    bool operator==(const Integer& o) const { return mpz_cmp(z_, o.z_) == 0; }
    bool operator!=(const Integer& o) const { return !(*this == o); }
    bool operator<(const Integer& o) const { return mpz_cmp(z_, o.z_) < 0; }

    std::string str() const;

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

  private:
    mpz_t z_;
};

class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const Integer& v);

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }
    bool is_integer() const;
    Integer numerator() const;
    Integer denominator() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const; // throws on division by zero
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    // base^e with e possibly negative (then base must be nonzero).
    static Rational pow(const Rational& base, long e);

    bool operator==(const Rational& o) const { return mpq_equal(q_, o.q_) != 0; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return mpq_cmp(q_, o.q_) < 0; }

    std::string str() const; // "n" or "n/d"
    double to_double() const { return mpq_get_d(q_); }

    mpq_srcptr raw() const { return q_; }

  private:
    mpq_t q_;
};

// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator*(const Rational& s) const { return {re * s, im * s}; }
    GaussianRational operator/(const GaussianRational& o) const;

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::string str() const;
};

// Dense polynomial with rational coefficients; coeff(i) multiplies x^i.
class RationalPolynomial {
  public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(coeff_.size()) - 1; }
    bool is_zero() const { return coeff_.empty(); }
    const Rational& coeff(std::size_t i) const;

    Rational eval(const Rational& x) const;

    // p(a + b*x) expanded exactly; used for symmetry checks such as p(1-x).
    RationalPolynomial compose_affine(const Rational& a, const Rational& b) const;

    bool operator==(const RationalPolynomial& o) const { return coeff_ == o.coeff_; }

  private:
    std::vector<Rational> coeff_;
    static const Rational zero_;
};

} // namespace periodica
