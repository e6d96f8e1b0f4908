#pragma once

// Periodic coefficient functions g: Z -> C of declared period m, with mean
// value, parity analysis and discrete Fourier coefficients.  Values are
// stored either exactly (Gaussian rationals, preferred for characters and
// for the randomized test families) or as fixed-precision complex numbers;
// parity and mean tests are exact in the first case and thresholded by the
// context in the second.

#include <optional>
#include <vector>

#include "cplx.hpp"
#include "rational.hpp"
#include "real.hpp"

namespace periodica {

enum class AbscissaClass {
    divergent_at_1, // nonzero mean: series diverges at s = 1
    conditional,    // zero mean, g not identically zero
    zero_function,
};

class PeriodicFunction {
  public:
    static PeriodicFunction from_exact(std::vector<GaussianRational> values);
    static PeriodicFunction from_values(std::vector<Complex> values);
    static PeriodicFunction constant_one();
    static PeriodicFunction zero(unsigned long period = 1);
    // The primitive non-principal character mod 4: values (0, 1, 0, -1).
    static PeriodicFunction mod4_character();

    unsigned long period() const { return period_; }
    bool exact() const { return exact_.has_value(); }

    // g(n) for any integer n; index reduced with non-negative modulus.
    const GaussianRational& exact_value(long n) const; // pre: exact()
    Complex value(long n, const PrecisionContext& ctx) const;

    GaussianRational mean_exact() const; // pre: exact()
    Complex mean(const PrecisionContext& ctx) const;

    bool is_identically_zero(const PrecisionContext& ctx) const;
    bool is_even(const PrecisionContext& ctx) const;
    bool is_odd(const PrecisionContext& ctx) const;

    // even(n) = (g(n)+g(-n))/2, odd(n) = (g(n)-g(-n))/2; exactness preserved.
    PeriodicFunction even_part() const;
    PeriodicFunction odd_part() const;

    // ghat(k) = (1/m) sum_j g(j) e^{-2 pi i j k / m}, k = 0..m-1.
    std::vector<Complex> dft(const PrecisionContext& ctx) const;

    AbscissaClass abscissa_class(const PrecisionContext& ctx) const;
    // 1 for nonzero mean, 0 for zero mean, meaningless for the zero function.
    double sigma_upper(const PrecisionContext& ctx) const;

    // Upper bound on max_n |g(n)| as a double (used in tail bounds).
    double max_abs_upper() const;

    // Exact mean subtracted from every value; pre: exact().
    PeriodicFunction minus_mean() const;

  private:
    PeriodicFunction() = default;

    unsigned long period_ = 1;
    std::optional<std::vector<GaussianRational>> exact_;
    std::optional<std::vector<Complex>> inexact_;
};

struct ParitySplit {
    PeriodicFunction even_part;
    PeriodicFunction odd_part;
};

ParitySplit parity_split(const PeriodicFunction& g);

} // namespace periodica
