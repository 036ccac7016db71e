#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casson/liealg.hpp"

namespace casson::cli {

struct AcceptanceOptions {
    std::uint64_t seed = 20240611;
    double tol_rank = kTolRank;
    double tol_mat = kTolMat;
    int threads = 1;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Number of acceptance criteria.
inline constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id, const AcceptanceOptions& opts);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// One "PASS|FAIL [id] title: detail" line per criterion; no timings, so reruns are byte-identical.
std::string format_report(const std::vector<CriterionResult>& results, const AcceptanceOptions& opts);

}  // namespace casson::cli
