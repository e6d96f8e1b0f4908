#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "bernoulli.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "rational.hpp"

using namespace periodica;
using namespace periodica::testing;

TEST_CASE("rational canonical form and arithmetic") {
    Rational a(6, -4);
    CHECK(a == Rational(-3, 2));
    CHECK(a.denominator() == Integer(2));
    CHECK(a.numerator() == Integer(-3));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK((Rational(1, 7) / Rational(2, 7)) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), invalid_argument_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), invalid_argument_error);
    CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational i(0, 1);
    CHECK((i * i) == GaussianRational(-1, 0));
    GaussianRational z(Rational(1, 2), Rational(-1, 3));
    CHECK((z / z) == GaussianRational(1, 0));
    CHECK((z * z.conj()).im.is_zero());
}

TEST_CASE("bernoulli numbers: stated values") {
    CHECK(bernoulli_numbers(0) == std::vector<Rational>{Rational(1)});
    auto b3 = bernoulli_numbers(3);
    CHECK(b3 == std::vector<Rational>{Rational(1), Rational(-1, 2), Rational(1, 6),
                                      Rational(0)});
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
}

TEST_CASE("bernoulli numbers agree with the Akiyama-Tanigawa oracle") {
    auto oracle = akiyama_tanigawa(40);
    auto got = bernoulli_numbers(40);
    for (unsigned long n = 0; n <= 40; ++n) CHECK(got[n] == oracle[n]);
}

TEST_CASE("convolution identity sum C(n+1,k) B_k = 0") {
    for (unsigned long n = 1; n <= 30; ++n) {
        Rational acc;
        for (unsigned long k = 0; k <= n; ++k)
            acc += Rational(Integer::binomial(n + 1, k)) * bernoulli_number(k);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("bernoulli polynomials: low degrees and B_n(0) = B_n") {
    CHECK(bernoulli_polynomial(0) == RationalPolynomial({Rational(1)}));
    CHECK(bernoulli_polynomial(1) == RationalPolynomial({Rational(-1, 2), Rational(1)}));
    CHECK(bernoulli_polynomial(2) ==
          RationalPolynomial({Rational(1, 6), Rational(-1), Rational(1)}));
    for (unsigned long n = 0; n <= 30; ++n)
        CHECK(bernoulli_polynomial(n).eval(Rational(0)) == bernoulli_number(n));
}

TEST_CASE("symmetry B_n(1-x) = (-1)^n B_n(x) exactly") {
    for (unsigned long n = 0; n <= 30; ++n) {
        RationalPolynomial p = bernoulli_polynomial(n);
        RationalPolynomial reflected = p.compose_affine(Rational(1), Rational(-1));
        if (n % 2 == 1) {
            std::vector<Rational> neg;
            for (long i = 0; i <= p.degree(); ++i)
                neg.push_back(-p.coeff(static_cast<std::size_t>(i)));
            CHECK(reflected == RationalPolynomial(neg));
        } else {
            CHECK(reflected == p);
        }
    }
}

TEST_CASE("euler numbers: values, odd vanishing, convolution") {
    CHECK(euler_number(0) == Integer(1));
    CHECK(euler_number(1) == Integer(0));
    CHECK(euler_number(2) == Integer(-1));
    CHECK(euler_number(4) == Integer(5));
    CHECK(euler_number(6) == Integer(-61));
    for (unsigned long k = 1; k <= 15; ++k) CHECK(euler_number(2 * k - 1).is_zero());
    // sum C(2n,2k) E_{2k} = 0, n >= 1
    for (unsigned long n = 1; n <= 15; ++n) {
        Integer acc(0);
        for (unsigned long k = 0; k <= n; ++k)
            acc += Integer::binomial(2 * n, 2 * k) * euler_number(2 * k);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("euler numbers match the series-division oracle") {
    auto oracle = euler_by_series_division(16);
    auto got = euler_numbers(16);
    for (unsigned long n = 0; n <= 16; ++n) CHECK(got[n] == oracle[n]);
}

TEST_CASE("generalized bernoulli: stated values") {
    CHECK(generalized_bernoulli_exact(1, PeriodicFunction::constant_one()) ==
          GaussianRational(Rational(1, 2), Rational(0)));
    for (unsigned long n = 0; n <= 6; ++n)
        CHECK(generalized_bernoulli_exact(n, PeriodicFunction::zero(3)).is_zero());
    CHECK(generalized_bernoulli_exact(0, PeriodicFunction::mod4_character()).is_zero());
}

TEST_CASE("generalized bernoulli matches the generating-function oracle") {
    std::mt19937_64 rng(42);
    auto entry = [&rng]() {
        switch (rng() % 5) {
            case 0: return GaussianRational(0, 0);
            case 1: return GaussianRational(1, 0);
            case 2: return GaussianRational(-1, 0);
            case 3: return GaussianRational(0, 1);
            default: return GaussianRational(0, -1);
        }
    };
    for (int trial = 0; trial < 12; ++trial) {
        unsigned long m = 1 + rng() % 6;
        std::vector<GaussianRational> vals(m);
        for (auto& v : vals) v = entry();
        PeriodicFunction chi = PeriodicFunction::from_exact(vals);
        for (unsigned long n = 0; n <= 10; ++n) {
            CHECK(generalized_bernoulli_exact(n, chi) == gen_bernoulli_by_series(n, chi));
        }
    }
}

TEST_CASE("caches are consistent under concurrent access") {
    std::vector<Rational> a, b;
    std::vector<Integer> ea, eb;
    std::thread t1([&] {
        a = bernoulli_numbers(200);
        ea = euler_numbers(60);
    });
    std::thread t2([&] {
        b = bernoulli_numbers(200);
        eb = euler_numbers(60);
    });
    t1.join();
    t2.join();
    CHECK(a == b);
    for (unsigned long i = 0; i <= 60; ++i) CHECK(ea[i] == eb[i]);
}
