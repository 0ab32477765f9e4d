#pragma once

#include <string>
#include <vector>

namespace otto {

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;  // worst deviation seen, or the error message
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;
    [[nodiscard]] bool passed() const;
};

/// Reduced-size oracle-equivalence and invariant checks, runnable from an
/// installed binary without the test tree. Deterministic (fixed seed).
[[nodiscard]] SelftestReport run_selftest(int workers);

}  // namespace otto
