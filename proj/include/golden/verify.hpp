#pragma once

#include <string>
#include <vector>

namespace golden::verify {

inline constexpr int kNumCriteria = 12;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // diagnostic on failure, summary statistic on success
    double seconds = 0.0;
};

/// Runs one of the twelve self-checks (1-based id).  `data_dir` is the
/// directory holding reference data files (the length-20 atlas).
CriterionResult run_criterion(int id, const std::string& data_dir);

std::vector<CriterionResult> run_all(const std::string& data_dir);

}  // namespace golden::verify
