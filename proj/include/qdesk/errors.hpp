#pragma once

#include <stdexcept>
#include <string>

namespace qdesk {

// Register bookkeeping violations: unknown names, width/length mismatches.
struct LayoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A state failed its norm invariant. States are never repaired silently.
struct NormError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid period or a broken 2-to-1 table.
struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Post-selection on an outcome of zero probability.
struct PostSelectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qdesk
