#pragma once

// Deterministic decimal rendering.  Printing truncates (rounds toward zero)
// so no digit beyond the declared reliable count is ever shown.

#include <string>

#include "cplx.hpp"
#include "real.hpp"

namespace periodica {

// digits <= 0 selects enough digits for an exact binary round-trip.
std::string to_decimal(const Real& x, long digits, bool truncate = true);

// "re" if |im| prints as zero, else "re + im*i" / "re - im*i".
std::string complex_to_decimal(const Complex& z, long digits, bool truncate = true);

} // namespace periodica
