#pragma once

// Brute-force summation with explicit tail bounds.  This is the ground
// truth the accelerated evaluators are tested against, so it deliberately
// knows nothing about them: ascending summation only, in whole-period
// blocks when the series is conditionally convergent.

#include "periodic.hpp"

namespace periodica {

struct Evaluation {
    Complex value;
    Real error_bound;       // claimed upper bound on |error|
    bool rigorous = false;  // false: Abel/period-block heuristic
    long terms_used = 0;
};

// L(s,g) = sum_{n>=1} g(n) n^{-s} truncated at n_terms.
//   nonzero mean: requires s > 1, rigorous bound max|g| N^{1-s}/(s-1);
//   zero mean:    requires s > 0, whole-period blocks, heuristic bound
//                 max|g| * m * N^{-s}.
Evaluation l_direct(const Real& s, const PeriodicFunction& g, long n_terms,
                    const PrecisionContext& ctx);
Evaluation l_direct(long s, const PeriodicFunction& g, long n_terms,
                    const PrecisionContext& ctx);

// T_f(s,y) = sum_{k>=1} k^{-s} f(k) / (k^2 + y^2) truncated at n_terms.
//   nonzero mean: requires s > -1, rigorous bound max|f| N^{-s-1}/(s+1);
//   zero mean:    requires s > -2, period blocks, heuristic bound
//                 max|f| * m * N^{-s-2} * (|s|+2)/(s+2).
Evaluation t_direct(const Real& s, const Real& y, const PeriodicFunction& f,
                    long n_terms, const PrecisionContext& ctx);

// Principal-value sum over 0 < |k| <= n_pairs of g(k)/(y+ik), accumulated in
// symmetric pairs and whole-period blocks.  Heuristic tail bound
// max|g| * (2y + 6m) / N.
Evaluation pv_sum(const PeriodicFunction& g, const Real& y, long n_pairs,
                  const PrecisionContext& ctx);

} // namespace periodica
