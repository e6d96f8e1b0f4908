#include "bernoulli.hpp"

#include <deque>
#include <mutex>

#include "cplx.hpp"
#include "errors.hpp"
#include "periodic.hpp"

namespace periodica {

namespace {

std::mutex bernoulli_mutex;
std::deque<Rational> bernoulli_cache; // index n -> B_n

std::mutex euler_mutex;
std::deque<Integer> euler_cache; // index n -> E_n

// Convolution recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0, n >= 1.
void grow_bernoulli(unsigned long n) {
    if (bernoulli_cache.empty()) bernoulli_cache.emplace_back(1);
    for (unsigned long i = bernoulli_cache.size(); i <= n; ++i) {
        Rational acc;
        for (unsigned long k = 0; k < i; ++k)
            acc += Rational(Integer::binomial(i + 1, k)) * bernoulli_cache[k];
        bernoulli_cache.push_back(-acc / Rational(static_cast<long>(i) + 1));
    }
}

// From cosh * sech = 1: sum_{k=0}^{n} C(2n,2k) E_{2k} = 0 for n >= 1.
void grow_euler(unsigned long n) {
    if (euler_cache.empty()) euler_cache.emplace_back(1);
    for (unsigned long i = euler_cache.size(); i <= n; ++i) {
        if (i % 2 == 1) {
            euler_cache.emplace_back(0);
            continue;
        }
        Integer acc(0);
        for (unsigned long k = 0; k + 2 <= i; k += 2)
            acc += Integer::binomial(i, k) * euler_cache[k];
        euler_cache.push_back(-acc);
    }
}

} // namespace

Rational bernoulli_number(unsigned long n) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    grow_bernoulli(n);
    return bernoulli_cache[n];
}

std::vector<Rational> bernoulli_numbers(unsigned long n_max) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    grow_bernoulli(n_max);
    return {bernoulli_cache.begin(), bernoulli_cache.begin() + static_cast<long>(n_max) + 1};
}

RationalPolynomial bernoulli_polynomial(unsigned long n) {
    std::vector<Rational> bs = bernoulli_numbers(n);
    std::vector<Rational> coeff(n + 1);
    // B_n(x) = sum_k C(n,k) B_k x^{n-k}
    for (unsigned long k = 0; k <= n; ++k)
        coeff[n - k] = Rational(Integer::binomial(n, k)) * bs[k];
    return RationalPolynomial(std::move(coeff));
}

Integer euler_number(unsigned long n) {
    std::lock_guard<std::mutex> lock(euler_mutex);
    grow_euler(n);
    return euler_cache[n];
}

std::vector<Integer> euler_numbers(unsigned long n_max) {
    std::lock_guard<std::mutex> lock(euler_mutex);
    grow_euler(n_max);
    return {euler_cache.begin(), euler_cache.begin() + static_cast<long>(n_max) + 1};
}

GaussianRational generalized_bernoulli_exact(unsigned long n, const PeriodicFunction& chi) {
    if (!chi.exact())
        throw invalid_argument_error("generalized_bernoulli_exact requires exact values");
    const long m = static_cast<long>(chi.period());
    RationalPolynomial bn = bernoulli_polynomial(n);
    GaussianRational acc;
    for (long k = 1; k <= m; ++k) {
        const GaussianRational& c = chi.exact_value(k);
        if (c.is_zero()) continue;
        acc = acc + c * bn.eval(Rational(k, m));
    }
    // m^{n-1}; for n = 0 this is 1/m.
    Rational scale = Rational::pow(Rational(m), static_cast<long>(n) - 1);
    return acc * scale;
}

Complex generalized_bernoulli(unsigned long n, const PeriodicFunction& chi,
                              const PrecisionContext& ctx) {
    if (chi.exact())
        return Complex::of(generalized_bernoulli_exact(n, chi), ctx.work_bits());
    const long m = static_cast<long>(chi.period());
    RationalPolynomial bn = bernoulli_polynomial(n);
    Complex acc(ctx.work_bits());
    for (long k = 1; k <= m; ++k)
        acc += chi.value(k, ctx) * to_real(bn.eval(Rational(k, m)), ctx);
    Real scale = pow_si(Real::of(m, ctx.work_bits()), static_cast<long>(n) - 1);
    return acc * scale;
}

} // namespace periodica
