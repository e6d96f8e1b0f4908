#pragma once

// Randomized identity suites behind the `verify` CLI subcommand.  Case
// generation is deterministic: every case derives its own RNG from
// (seed, family, index), so runs are reproducible and families are
// independent of each other.
//
// Suites: "lemmas" (six families: pfrac, trec, pv, todd, teven, xform),
// "theorems" (four display families: acc-odd-omega, acc-odd-trig,
// acc-even-omega, acc-even-trig), "all" (both).

#include <cstdint>
#include <string>

#include "real.hpp"

namespace periodica {

struct VerifyOptions {
    std::string suite = "all";
    unsigned trials = 50;
    std::uint64_t seed = 1;
    long oracle_terms = 10000; // direct-oracle length inside theorem residuals
};

struct VerifyOutcome {
    std::string report;     // one line per case: id residual bound PASS|FAIL
    unsigned cases = 0;
    unsigned failures = 0;
};

VerifyOutcome run_verify(const VerifyOptions& opts, const PrecisionContext& ctx);

} // namespace periodica
