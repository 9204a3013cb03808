#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace parhom {

struct SelfcheckOptions {
    std::uint64_t seed = 1;
    /// Largest order in the exhaustive gadget sweep.
    int exhaustive_max_order = 10;
    /// Criteria to run, 1-based; empty means all.
    std::vector<int> only;
    /// Breaks every constructed gadget before verification, so the gadget
    /// criteria must fail. Used to check that failures surface.
    bool corrupt_gadgets = false;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    /// Zero when the criterion has no time limit.
    double limit_seconds = 0;
};

struct SelfcheckReport {
    std::vector<CriterionResult> results;

    bool ok() const;
    /// One line per criterion. Without timing the text depends only on the
    /// options.
    std::string text(bool timing) const;
};

inline constexpr int kCriterionCount = 10;

SelfcheckReport run_selfcheck(const SelfcheckOptions& options);

}  // namespace parhom
