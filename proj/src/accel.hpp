#pragma once

// Exponentially convergent evaluation of L(s,g) for integer s and periodic
// g.  The reciprocity identities used here trade a polynomially convergent
// Dirichlet series for a handful of series whose terms decay like
// e^{-2 n alpha}, plus closed-form data from the exact and closed_form
// modules.  Free parameters alpha, beta > 0 always satisfy alpha*beta = pi^2.

#include <optional>
#include <string>

#include "closed_form.hpp"
#include "direct.hpp"
#include "periodic.hpp"

namespace periodica {

struct AccelParams {
    Real alpha;
    Real beta; // always derived as pi^2/alpha
    long q = 0;
    long n_terms = 0; // series truncation; 0 = automatic per series

    // beta is recomputed from alpha; alpha must be positive.
    static AccelParams make(const Real& alpha, long q, const PrecisionContext& ctx,
                            long n_terms = 0);
    // alpha = pi/sqrt(m), the rate-balancing choice.
    static AccelParams for_period(unsigned long m, long q, const PrecisionContext& ctx,
                                  long n_terms = 0);
};

struct MethodReport {
    Complex value;
    long terms_used = 0; // summand evaluations across all infinite series
    AccelParams params;
    std::optional<Real> residual_check; // |route1 - route2| when both ran
    std::string method;
};

enum class SolveRoute {
    auto_pick, // trigonometric for real-valued g, root-of-unity otherwise
    omega,     // complex root-of-unity form
    trig,      // paired real form
    both,      // run both, cross-check, report the default route's value
};

// L(2q,g) for odd g, q >= 1.
MethodReport solve_odd_g(long q, const PeriodicFunction& g, const AccelParams& params,
                         const PrecisionContext& ctx,
                         SolveRoute route = SolveRoute::auto_pick);

// L(2q+1,g) for even g; q >= 1, or q = 0 when M(g) = 0.  When M(g) != 0 the
// required zeta(2q+1) is sourced from zeta_odd_ramanujan with its own
// independent parameters.
MethodReport solve_even_g(long q, const PeriodicFunction& g, const AccelParams& params,
                          const PrecisionContext& ctx,
                          SolveRoute route = SolveRoute::auto_pick);

// zeta(2q+1) by Ramanujan's reciprocity formula, q >= 1.  Degenerate when
// alpha^{-q} - (-beta)^{-q} vanishes (q even, alpha = beta = pi).
MethodReport zeta_odd_ramanujan(long q, const AccelParams& params,
                                const PrecisionContext& ctx);
MethodReport zeta_odd_ramanujan(long q, const PrecisionContext& ctx); // defaults

// L(2q) for the mod-4 character via the sech-series specialization, q >= 1.
MethodReport l4_accel(long q, const AccelParams& params, const PrecisionContext& ctx);
MethodReport l4_accel(long q, const PrecisionContext& ctx); // alpha = pi/2

// Catalan's constant, evaluated from its classical rapidly convergent form
// G = 5 pi^2/48 - 2 sum (-1)^n (2n+1)^{-2}/(e^{(2n+1)pi}-1)
//       - (1/4) sum n^{-2}/cosh(pi n).
MethodReport catalan(const PrecisionContext& ctx);

// sum_{n>=1} n^{-2q-1} cos(2 pi n r), 0 < r < 1, q >= 0.
MethodReport lerch_cos(long q, const Real& r, const AccelParams& params,
                       const PrecisionContext& ctx);
MethodReport lerch_cos(long q, const Real& r, const PrecisionContext& ctx);

// sum_{n>=1} n^{-2q} sin(2 pi n r), 0 < r < 1, q >= 1.  Requires
// alpha > pi r (kept as an API contract; see README).
MethodReport lerch_sin(long q, const Real& r, const AccelParams& params,
                       const PrecisionContext& ctx);
MethodReport lerch_sin(long q, const Real& r, const PrecisionContext& ctx);

struct EvaluateConfig {
    std::optional<Real> alpha; // overrides the automatic pi/sqrt(m)
    long n_terms = 0;
    SolveRoute route = SolveRoute::auto_pick;
};

// Top-level dispatcher for L(s,g), s >= 1 (s = 1 needs zero mean): splits g
// by parity, takes the closed form where the parity matches s and the
// matching acceleration identity where it does not.
MethodReport evaluate(long s, const PeriodicFunction& g, const EvaluateConfig& config,
                      const PrecisionContext& ctx);

namespace detail {

// Truncation rule: smallest N with C * N^{-a} * e^{-cN} / (1 - e^{-c})
// below the target; everything in log2 space.
long series_length(double log2_C, double poly_a, double rate_c, double log2_target);

// Per-evaluation absolute truncation target 2^{-(prec+guard)} / n_series.
double log2_trunc_target(const PrecisionContext& ctx, int n_series);

struct SeriesSum {
    Complex value;
    long terms = 0;
    double next_term_log2 = -1e9; // bound on the first discarded term
};

// sum_{n>=1}^{N} n^{-p} g(n) / (e^{2 n a} - 1)
SeriesSum exp_kernel_series(const PeriodicFunction& g, long p, const Real& a,
                            long forced_terms, double log2_target,
                            const PrecisionContext& ctx);

// sum_{k in K} g(k) sum_{n>=1} n^{-p} / (e^{n rate} omega^k - 1);
// K = 1..m-1 when skip_k0, else 0..m-1.
SeriesSum omega_kernel_series(const PeriodicFunction& g, long p, const Real& rate,
                              bool skip_k0, long forced_terms, double log2_target,
                              const PrecisionContext& ctx);

// sum_{k=1}^{m-1} g(k) sin(2 pi k/m) sum_n n^{-p}/(cosh(n rate) - cos(2 pi k/m))
SeriesSum trig_kernel_series_odd(const PeriodicFunction& g, long p, const Real& rate,
                                 long forced_terms, double log2_target,
                                 const PrecisionContext& ctx);

// sum_{k=0}^{m-1} g(k) sum_n n^{-p} (cos(2 pi k/m) - e^{-n rate})
//                                   / (cosh(n rate) - cos(2 pi k/m))
SeriesSum trig_kernel_series_even(const PeriodicFunction& g, long p, const Real& rate,
                                  long forced_terms, double log2_target,
                                  const PrecisionContext& ctx);

} // namespace detail

} // namespace periodica
