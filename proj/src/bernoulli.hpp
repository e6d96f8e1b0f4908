#pragma once

// Bernoulli numbers and polynomials, Euler numbers, and generalized
// Bernoulli numbers attached to a periodic coefficient function.  All values
// are exact; sequences are memoized up to the largest index requested and
// the caches are safe for concurrent callers (growth is serialized).

#include "rational.hpp"

#include <vector>

namespace periodica {

class PeriodicFunction;
class Complex;
struct PrecisionContext;

// B_n in the convention B_1 = -1/2 (exponential generating function
// t e^{xt}/(e^t - 1) evaluated at x = 0).
Rational bernoulli_number(unsigned long n);
std::vector<Rational> bernoulli_numbers(unsigned long n_max);

// Coefficients of B_n(x); B_n(0) == bernoulli_number(n).
RationalPolynomial bernoulli_polynomial(unsigned long n);

// E_n from the sech generating function; zero at odd index.
Integer euler_number(unsigned long n);
std::vector<Integer> euler_numbers(unsigned long n_max);

// Generalized Bernoulli number attached to chi of period m, computed by the
// closed reduction m^{n-1} * sum_{k=1..m} chi(k) B_n(k/m).  The exact
// overload requires chi to carry exact (Gaussian-rational) values.
GaussianRational generalized_bernoulli_exact(unsigned long n, const PeriodicFunction& chi);
Complex generalized_bernoulli(unsigned long n, const PeriodicFunction& chi,
                              const PrecisionContext& ctx);

} // namespace periodica
