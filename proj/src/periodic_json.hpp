#pragma once

// JSON wire format for periodic functions:
//   {"period": m, "values": [[re, im], ...]}
// with re/im given as JSON integers (stored exactly) or decimal strings
// (parsed at context precision).

#include <string>

#include "periodic.hpp"

namespace periodica {

PeriodicFunction periodic_from_json(const std::string& text, const PrecisionContext& ctx);
std::string periodic_to_json(const PeriodicFunction& g, const PrecisionContext& ctx,
                             long digits);

} // namespace periodica
