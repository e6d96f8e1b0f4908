#pragma once

// Closed-form values of L(q,g) when q and g share parity, plus the classical
// specializations: zeta at even integers and the mod-4 L-series at odd
// integers.  Bernoulli polynomials are evaluated exactly over rationals and
// converted once, so the alternating coefficients never cancel in floating
// point.

#include "periodic.hpp"

namespace periodica {

// L(q,g) = -(1/2) (2 pi i)^q / q! * sum_k ghat(k) B_q(k/m).
// Preconditions: parity(q) == parity(g); q = 0 needs even g; q = 1 needs
// zero mean.  The zero function is accepted for any q and gives 0.
Complex l_closed_complex(long q, const PeriodicFunction& g, const PrecisionContext& ctx);

// Trigonometric restatement; q_arg = 2q for even g, 2q+1 for odd g.
// Values agree with l_closed_complex to working precision.
Complex l_closed_real(long q_arg, const PeriodicFunction& g, const PrecisionContext& ctx);

// zeta(2n) = -(1/2) (2 pi i)^{2n} B_{2n} / (2n)!; zeta(0) = -1/2.
Real zeta_even(long n, const PrecisionContext& ctx);

// L(2n+1) for the mod-4 character: (1/2) (pi/2)^{2n+1} (-1)^n E_{2n} / (2n)!.
Real l4_closed_odd(long n, const PrecisionContext& ctx);

} // namespace periodica
