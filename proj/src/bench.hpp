#pragma once

// Convergence benchmark: accelerated route vs direct summation for a chosen
// constant, as CSV rows `method,term_index,term_abs,abs_error`.  For the
// accelerated route term_index counts the per-series truncation length and
// abs_error is measured after re-solving with that truncation; the
// reference value comes from a same-binary run at twice the precision.

#include <string>

#include "real.hpp"

namespace periodica {

// targets: "zeta3", "zeta5", "catalan"
std::string bench_csv(const std::string& target, const PrecisionContext& ctx,
                      long direct_terms = 10000);

} // namespace periodica
