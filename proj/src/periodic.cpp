#include "periodic.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "errors.hpp"

namespace periodica {

namespace {

std::size_t reduce_index(long n, unsigned long m) {
    long r = n % static_cast<long>(m);
    if (r < 0) r += static_cast<long>(m);
    return static_cast<std::size_t>(r);
}

} // namespace

PeriodicFunction PeriodicFunction::from_exact(std::vector<GaussianRational> values) {
    if (values.empty()) throw invalid_argument_error("periodic function needs period >= 1");
    PeriodicFunction g;
    g.period_ = values.size();
    g.exact_ = std::move(values);
    return g;
}

PeriodicFunction PeriodicFunction::from_values(std::vector<Complex> values) {
    if (values.empty()) throw invalid_argument_error("periodic function needs period >= 1");
    PeriodicFunction g;
    g.period_ = values.size();
    g.inexact_ = std::move(values);
    return g;
}

PeriodicFunction PeriodicFunction::constant_one() {
    return from_exact({GaussianRational(1, 0)});
}

PeriodicFunction PeriodicFunction::zero(unsigned long period) {
    if (period == 0) throw invalid_argument_error("periodic function needs period >= 1");
    return from_exact(std::vector<GaussianRational>(period));
}

PeriodicFunction PeriodicFunction::mod4_character() {
    return from_exact({GaussianRational(0, 0), GaussianRational(1, 0),
                       GaussianRational(0, 0), GaussianRational(-1, 0)});
}

const GaussianRational& PeriodicFunction::exact_value(long n) const {
    return (*exact_)[reduce_index(n, period_)];
}

Complex PeriodicFunction::value(long n, const PrecisionContext& ctx) const {
    const std::size_t i = reduce_index(n, period_);
    const mpfr_prec_t wp = ctx.work_bits();
    if (exact_) return Complex::of((*exact_)[i], wp);
    const Complex& v = (*inexact_)[i];
    Real re(wp), im(wp);
    mpfr_set(re.raw(), v.re().raw(), MPFR_RNDN);
    mpfr_set(im.raw(), v.im().raw(), MPFR_RNDN);
    return Complex(std::move(re), std::move(im));
}

GaussianRational PeriodicFunction::mean_exact() const {
    GaussianRational s;
    for (const auto& v : *exact_) s = s + v;
    Rational inv_m(1, static_cast<long>(period_));
    return {s.re * inv_m, s.im * inv_m};
}

Complex PeriodicFunction::mean(const PrecisionContext& ctx) const {
    if (exact_) return Complex::of(mean_exact(), ctx.work_bits());
    Complex s(ctx.work_bits());
    for (unsigned long k = 0; k < period_; ++k) s += value(static_cast<long>(k), ctx);
    return s / Real::of(static_cast<long>(period_), ctx.work_bits());
}

bool PeriodicFunction::is_identically_zero(const PrecisionContext& ctx) const {
    if (exact_) {
        for (const auto& v : *exact_)
            if (!v.is_zero()) return false;
        return true;
    }
    const Real eps = near_zero_threshold(ctx);
    for (const auto& v : *inexact_)
        if (!(v.abs() < eps)) return false;
    return true;
}

bool PeriodicFunction::is_even(const PrecisionContext& ctx) const {
    if (exact_) {
        for (unsigned long k = 0; k < period_; ++k)
            if (exact_value(static_cast<long>(k)) != exact_value(-static_cast<long>(k)))
                return false;
        return true;
    }
    const Real eps = near_zero_threshold(ctx);
    for (unsigned long k = 0; k < period_; ++k) {
        Complex d = value(static_cast<long>(k), ctx) - value(-static_cast<long>(k), ctx);
        if (!(d.abs() < eps)) return false;
    }
    return true;
}

bool PeriodicFunction::is_odd(const PrecisionContext& ctx) const {
    if (exact_) {
        for (unsigned long k = 0; k < period_; ++k)
            if (exact_value(static_cast<long>(k)) != -exact_value(-static_cast<long>(k)))
                return false;
        return true;
    }
    const Real eps = near_zero_threshold(ctx);
    for (unsigned long k = 0; k < period_; ++k) {
        Complex d = value(static_cast<long>(k), ctx) + value(-static_cast<long>(k), ctx);
        if (!(d.abs() < eps)) return false;
    }
    return true;
}

PeriodicFunction PeriodicFunction::even_part() const {
    const long m = static_cast<long>(period_);
    if (exact_) {
        std::vector<GaussianRational> vals(period_);
        const Rational half(1, 2);
        for (long k = 0; k < m; ++k)
            vals[static_cast<std::size_t>(k)] =
                (exact_value(k) + exact_value(-k)) * half;
        return from_exact(std::move(vals));
    }
    std::vector<Complex> vals;
    vals.reserve(period_);
    const Real half = Real::of(0.5, (*inexact_)[0].re().prec());
    for (long k = 0; k < m; ++k) {
        const Complex& a = (*inexact_)[reduce_index(k, period_)];
        const Complex& b = (*inexact_)[reduce_index(-k, period_)];
        vals.push_back((a + b) * half);
    }
    return from_values(std::move(vals));
}

PeriodicFunction PeriodicFunction::odd_part() const {
    const long m = static_cast<long>(period_);
    if (exact_) {
        std::vector<GaussianRational> vals(period_);
        const Rational half(1, 2);
        for (long k = 0; k < m; ++k)
            vals[static_cast<std::size_t>(k)] =
                (exact_value(k) - exact_value(-k)) * half;
        return from_exact(std::move(vals));
    }
    std::vector<Complex> vals;
    vals.reserve(period_);
    const Real half = Real::of(0.5, (*inexact_)[0].re().prec());
    for (long k = 0; k < m; ++k) {
        const Complex& a = (*inexact_)[reduce_index(k, period_)];
        const Complex& b = (*inexact_)[reduce_index(-k, period_)];
        vals.push_back((a - b) * half);
    }
    return from_values(std::move(vals));
}

std::vector<Complex> PeriodicFunction::dft(const PrecisionContext& ctx) const {
    const mpfr_prec_t wp = ctx.work_bits();
    const unsigned long m = period_;
    const Real pi = pi_value(ctx);
    std::vector<Complex> out;
    out.reserve(m);
    const Real inv_m = Real::of(1, wp) / static_cast<long>(m);
    for (unsigned long k = 0; k < m; ++k) {
        Complex acc(wp);
        for (unsigned long j = 0; j < m; ++j) {
            // angle reduced exactly: -2*pi*((j*k) mod m)/m
            unsigned long r = (j * k) % m;
            Real theta = pi * Real::of(Rational(-2 * static_cast<long>(r),
                                                static_cast<long>(m)), wp);
            acc += value(static_cast<long>(j), ctx) * Complex::unit(theta);
        }
        out.push_back(acc * inv_m);
    }
    return out;
}

AbscissaClass PeriodicFunction::abscissa_class(const PrecisionContext& ctx) const {
    if (is_identically_zero(ctx)) return AbscissaClass::zero_function;
    if (exact_) {
        return mean_exact().is_zero() ? AbscissaClass::conditional
                                      : AbscissaClass::divergent_at_1;
    }
    return mean(ctx).abs() < near_zero_threshold(ctx) ? AbscissaClass::conditional
                                                      : AbscissaClass::divergent_at_1;
}

double PeriodicFunction::sigma_upper(const PrecisionContext& ctx) const {
    switch (abscissa_class(ctx)) {
        case AbscissaClass::divergent_at_1: return 1.0;
        case AbscissaClass::conditional: return 0.0;
        case AbscissaClass::zero_function: return -std::numeric_limits<double>::infinity();
    }
    return 1.0;
}

double PeriodicFunction::max_abs_upper() const {
    double best = 0.0;
    for (unsigned long k = 0; k < period_; ++k) {
        double a;
        if (exact_) {
            const auto& v = (*exact_)[k];
            a = std::abs(v.re.to_double()) + std::abs(v.im.to_double());
        } else {
            const auto& v = (*inexact_)[k];
            a = std::abs(v.re().to_double()) + std::abs(v.im().to_double());
        }
        best = std::max(best, a);
    }
    return best * (1.0 + 1e-12) + 1e-300;
}

PeriodicFunction PeriodicFunction::minus_mean() const {
    if (!exact_) throw invalid_argument_error("minus_mean requires exact values");
    GaussianRational mu = mean_exact();
    std::vector<GaussianRational> vals(*exact_);
    for (auto& v : vals) v = v - mu;
    return from_exact(std::move(vals));
}

ParitySplit parity_split(const PeriodicFunction& g) {
    return ParitySplit{g.even_part(), g.odd_part()};
}

} // namespace periodica
