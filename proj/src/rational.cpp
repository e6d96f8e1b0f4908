#include "rational.hpp"

#include "errors.hpp"

namespace periodica {

Integer::Integer(const std::string& decimal) {
    if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
        mpz_clear(z_);
        mpz_init(z_);
        throw parse_error("not a decimal integer: '" + decimal + "'");
    }
}

Integer Integer::binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.z_, n, k);
    return r;
}

Integer Integer::factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.z_, n);
    return r;
}

Integer Integer::pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.z_, base.z_, e);
    return r;
}

Integer Integer::operator-() const {
    Integer r;
    mpz_neg(r.z_, z_);
    return r;
}

Integer Integer::operator+(const Integer& o) const {
    Integer r;
    mpz_add(r.z_, z_, o.z_);
    return r;
}

Integer Integer::operator-(const Integer& o) const {
    Integer r;
    mpz_sub(r.z_, z_, o.z_);
    return r;
}

Integer Integer::operator*(const Integer& o) const {
    Integer r;
    mpz_mul(r.z_, z_, o.z_);
    return r;
}

std::string Integer::str() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

Rational::Rational(long num, long den) {
    if (den == 0) throw invalid_argument_error("rational with zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw invalid_argument_error("rational with zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

Rational::Rational(const Integer& v) {
    mpq_init(q_);
    mpz_set(mpq_numref(q_), v.raw());
}

bool Rational::is_integer() const {
    return mpz_cmp_ui(mpq_denref(q_), 1) == 0;
}

Integer Rational::numerator() const {
    Integer r;
    mpz_set(r.raw(), mpq_numref(q_));
    return r;
}

Integer Rational::denominator() const {
    Integer r;
    mpz_set(r.raw(), mpq_denref(q_));
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    Rational r;
    mpq_add(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator-(const Rational& o) const {
    Rational r;
    mpq_sub(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    Rational r;
    mpq_mul(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw invalid_argument_error("rational division by zero");
    Rational r;
    mpq_div(r.q_, q_, o.q_);
    return r;
}

Rational Rational::pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base.is_zero() && e < 0)
        throw invalid_argument_error("zero raised to a negative power");
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), ae);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), ae);
    if (e < 0) mpq_inv(r.q_, r.q_);
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    Rational norm = o.re * o.re + o.im * o.im;
    if (norm.is_zero()) throw invalid_argument_error("Gaussian-rational division by zero");
    GaussianRational num = *this * o.conj();
    return {num.re / norm, num.im / norm};
}

std::string GaussianRational::str() const {
    if (im.is_zero()) return re.str();
    std::string tail = im.sign() < 0 ? "-" + (-im).str() : "+" + im.str();
    return re.str() + tail + "i";
}

const Rational RationalPolynomial::zero_{};

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeff_(std::move(coeffs)) {
    while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
}

const Rational& RationalPolynomial::coeff(std::size_t i) const {
    if (i >= coeff_.size()) return zero_;
    return coeff_[i];
}

Rational RationalPolynomial::eval(const Rational& x) const {
    Rational acc;
    for (std::size_t i = coeff_.size(); i-- > 0;) {
        acc *= x;
        acc += coeff_[i];
    }
    return acc;
}

RationalPolynomial RationalPolynomial::compose_affine(const Rational& a, const Rational& b) const {
    // Horner in the polynomial ring: result = (...(c_d*(a+bx) + c_{d-1})*(a+bx) + ...)
    std::vector<Rational> acc;
    for (std::size_t i = coeff_.size(); i-- > 0;) {
        std::vector<Rational> next(acc.size() + 1);
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j] += acc[j] * a;
            next[j + 1] += acc[j] * b;
        }
        if (next.empty()) next.emplace_back();
        next[0] += coeff_[i];
        acc = std::move(next);
    }
    return RationalPolynomial(std::move(acc));
}

} // namespace periodica
