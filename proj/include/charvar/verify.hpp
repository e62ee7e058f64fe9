#pragma once

#include <optional>
#include <utility>

#include "charvar/report.hpp"

namespace charvar {

struct VerifyOptions {
    unsigned genus_max = 10;
    /// Test hook: adds 1 to the given (row, col) entry of the recursion
    /// matrix before verifying, to prove the checks are not vacuous.
    std::optional<std::pair<unsigned, unsigned>> fault_entry;
    unsigned threads = 0;  // 0 = CHARVAR_THREADS or hardware concurrency
};

/// Runs the whole identity web: genus-1 strata, recursion/diagonalization,
/// moduli-level identities and topology, and the mirror suite.
Report run_full_verification(const VerifyOptions& options);

}  // namespace charvar
