#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace symineq {

/// Everything a trial sampled, recorded at full precision so any report can
/// be replayed bit-exactly. Vector checkers use x/y; the scalar Dresher
/// checker packs (a,c) into x and (b,d) into y; matrix checkers store the
/// flattened symmetric matrices in x/y and the tall factor in a (rows x cols,
/// row-major).
struct TrialInputs {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> a;
    int n = 0;
    int rows = 0;
    int cols = 0;
    int k = 0;
    int l = 1;
    double p = 1.0;
    std::string variant;
};

/// One inequality trial. margin is oriented so margin >= 0 means the
/// inequality held; pass applies the relative tolerance
/// margin >= -tol * max(1, |lhs|, |rhs|).
struct InequalityReport {
    std::string checker_id;
    TrialInputs inputs;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
    std::uint64_t trial_index = 0;
};

inline double margin_scale(double lhs, double rhs) {
    double s = 1.0;
    if (std::abs(lhs) > s) s = std::abs(lhs);
    if (std::abs(rhs) > s) s = std::abs(rhs);
    return s;
}

struct CheckerSummary {
    std::uint64_t trials = 0;
    std::uint64_t passes = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    std::uint64_t worst_trial_index = 0;
};

struct SuiteSummary {
    std::map<std::string, CheckerSummary> checkers;
    std::vector<InequalityReport> violations;

    std::uint64_t total_trials() const {
        std::uint64_t t = 0;
        for (const auto& [id, s] : checkers) t += s.trials;
        return t;
    }
    std::uint64_t total_violations() const { return violations.size(); }
    bool all_pass() const { return violations.empty(); }
};

}  // namespace symineq
