#pragma once

// Every identity behind the acceleration engine, restated as a computable
// residual with a declared truncation bound.  The checks here never call
// the solvers in accel: left-hand sides come from direct summation, closed
// forms, or finite elementary-function sums, so a defect in either side
// shows up instead of cancelling.
//
// Check inventory (names describe the mathematical content):
//   partial_fraction_residual  - the coth partial-fraction expansion turned
//                                into the F(s+1)/F(s+2) double-sum identity
//   t_recurrence_residual      - the quadratic shift T(s,y) -> T(s-2q,y)
//   principal_value_residual   - PV sum of g(k)/(y+ik) vs the coth form
//   odd_t_forms / even_t_forms - the four equivalent representations of
//                                T_g(-1,y) (odd g) and T_g(0,y) (even g):
//                                direct series, coth, root-of-unity and
//                                real-trigonometric closed sums
//   accel_identity_*           - the full acceleration displays, with the
//                                target L value taken from the direct oracle
//
// The x-parameterized evaluator is the master form; the alpha-parameterized
// display is obtained from it by the substitution x = pi/alpha and a single
// uniform rescaling of both sides, so the two share one computation graph.

#include "direct.hpp"
#include "periodic.hpp"

namespace periodica {

struct Residual {
    Complex lhs;
    Complex rhs;
    Real residual; // |lhs - rhs|
    Real scale;    // max(|lhs|, |rhs|, 1)
};

Residual make_residual(const Complex& lhs, const Complex& rhs);

struct ResidualReport {
    Residual res;
    Real declared_bound; // total truncation allowance (rounding excluded)
};

// (1/2) pi x F(s+1) + pi x sum_k k^{-s-1} f(k)/(e^{2 pi k/x}-1)
//   = (1/2) x^2 F(s+2) + x^2 sum_n sum_k k^{-s} f(k)/(k^2+n^2 x^2)
// Requires s > 1 so the double-sum tail bound is available.
ResidualReport partial_fraction_residual(const PeriodicFunction& f, const Real& s,
                                         const Real& x, long n_terms,
                                         const PrecisionContext& ctx);

// T_f(s,y) = (-1)^q y^{-2q} T_f(s-2q,y) + sum_{j=1}^q (-1)^{j+1} y^{-2j} F(s-2j+2)
ResidualReport t_recurrence_residual(const PeriodicFunction& f, const Real& s, const Real& y,
                                     long q, long n_terms, const PrecisionContext& ctx);

// PV sum_{k!=0} g(k)/(y+ik) = -g(0)/y + pi/m sum_k g(k) coth(pi(y+ik)/m)
ResidualReport principal_value_residual(const PeriodicFunction& g, const Real& y,
                                        long n_pairs, const PrecisionContext& ctx);

struct TForms {
    Complex direct;    // truncated series
    Complex coth_form;
    Complex omega_form;
    Complex trig_form;
    Real direct_bound; // tail bound of the direct route
    Residual direct_vs_coth;
    Residual coth_vs_omega;
    Residual omega_vs_trig;
};

// T_g(-1,y) for odd g; see (ToddCoth)/(ToddOmega)/(ToddReal) style forms.
TForms odd_t_forms(const PeriodicFunction& g, const Real& y, long n_terms,
                   const PrecisionContext& ctx);
// T_g(0,y) for even g.
TForms even_t_forms(const PeriodicFunction& g, const Real& y, long n_terms,
                    const PrecisionContext& ctx);

enum class IdentityForm { omega, trig };

struct IdentitySides {
    Complex lhs;
    Complex rhs;
    Real declared_bound;
    long terms = 0;
};

// Master x-form of the acceleration identity (odd g: target L(2q,g); even g:
// target L(2q+1,g)); the target value comes from l_direct with oracle_terms
// terms and its tail bound is folded into declared_bound.
IdentitySides accel_identity_sides_x(const PeriodicFunction& g, long q, const Real& x,
                                     IdentityForm form, long oracle_terms,
                                     const PrecisionContext& ctx);

// Same computation graph at x = pi/alpha, both sides rescaled by
// alpha^{-q+1/2}/(pi x) (odd) or alpha^{-q}/(pi x) (even).
IdentitySides accel_identity_sides(const PeriodicFunction& g, long q, const Real& alpha,
                                   IdentityForm form, long oracle_terms,
                                   const PrecisionContext& ctx);

ResidualReport accel_identity_residual(const PeriodicFunction& g, long q, const Real& alpha,
                                       IdentityForm form, long oracle_terms,
                                       const PrecisionContext& ctx);

} // namespace periodica
