#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symineq/report.hpp"
#include "symineq/rng.hpp"

namespace symineq {

enum class KPolicy { AllValid, Fixed, Random };
enum class EntryDistribution { LogUniform, Uniform };

/// Configuration of one randomized verification run. Per-trial randomness is
/// derived from (seed, checker id, trial index) only, so a run is
/// reproducible and independent of execution order and thread count.
struct TrialConfig {
    std::uint64_t seed = 42;
    int trials = 1000;
    int n_lo = 2;
    int n_hi = 8;
    KPolicy k_policy = KPolicy::Random;
    int k_fixed = 1;
    KPolicy l_policy = KPolicy::Random;
    int l_fixed = 1;
    std::vector<double> p_grid;  // empty -> the checker's default grid
    EntryDistribution dist = EntryDistribution::LogUniform;
    double entry_lo = 1e-2;
    double entry_hi = 1e2;
    double tolerance = 1e-9;

    void validate() const;  // throws std::domain_error
};

// --- single-shot checker operations ---------------------------------------

/// lhs = f(x+y), rhs = f(x)+f(y), margin = lhs - rhs.
InequalityReport check_superadditive(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, std::span<const double> y, double tol);

/// margin = rhs - lhs = f(x)+f(y) - f(x+y).
InequalityReport check_subadditive(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, std::span<const double> y, double tol);

/// Harmonic-mean bound for reciprocal concavity of x -> e_k(x^p), p in (-1,0):
/// lhs = e_k(((x+y)/2)^p), rhs = 2 (e_k(x^p) : e_k(y^p)), margin = rhs - lhs.
InequalityReport check_recip_concave(std::span<const double> x,
                                     std::span<const double> y, int k, double p,
                                     double tol);

enum class DresherForm { RatioDenominator, PowerSumDenominator };

/// The scalar Dresher-type inequality behind the h_k/h_1 subadditivity:
/// RatioDenominator is
///   [((a^p+b^p)^k + (c^p+d^p)^k) / ((a+b)^p + (c+d)^p)]^{1/(p(k-1))}
///     <= [(a^{pk}+c^{pk})/(a^p+c^p)]^{1/(p(k-1))}
///      + [(b^{pk}+d^{pk})/(b^p+d^p)]^{1/(p(k-1))},
/// PowerSumDenominator replaces the left denominator by a^p+b^p+c^p+d^p and
/// the outer exponents by 1/(k-1). An all-zero pair contributes 0 by
/// continuity; all four inputs zero is a domain error.
InequalityReport check_dresher_scalar(double a, double b, double c, double d,
                                      int k, double p, double tol,
                                      DresherForm form = DresherForm::RatioDenominator);

/// Mixed Minkowski inequality for nonnegative matrices (same shape):
/// [sum_i (sum_j (x_ij^p + y_ij^p))^k]^{1/(pk)}
///   <= [sum_i (sum_j x_ij)^{pk}]^{1/(pk)} + [sum_i (sum_j y_ij)^{pk}]^{1/(pk)}.
/// (The row sums on the right are what superadditivity of t^p plus
/// Minkowski's norm inequality actually yields; without them the statement
/// fails for multi-column inputs.)
InequalityReport check_mixed_minkowski(std::span<const double> xmat,
                                       std::span<const double> ymat, int rows,
                                       int cols, int k, double p, double tol);

// --- checker registry and suite driver -------------------------------------

struct CheckerDef {
    std::string id;
    std::string summary;
    std::vector<double> default_p_grid;
    bool (*p_proven)(double p);
    bool (*p_evaluable)(double p);
    // Samples x/y (and matrix shape) for one trial; k/l not yet assigned.
    TrialInputs (*sample)(RngStream&, const TrialConfig&, double p);
    // Inclusive k ranges: the mathematical domain of the evaluator, the
    // theorem hypothesis at this (n, p), and the range the suite samples
    // (the hypothesis range clipped for trial cost). Empty range: lo > hi.
    void (*k_domain)(int n, int& lo, int& hi);
    void (*k_proven)(int n, double p, int& lo, int& hi);
    void (*k_trial)(int n, double p, int& lo, int& hi);
    bool uses_l;
    // Evaluates the recorded inputs; fills lhs/rhs/margin/pass (and variant).
    InequalityReport (*evaluate)(const TrialInputs&, double tol);
};

/// The eleven vector/scalar checkers, in suite order.
std::span<const CheckerDef> checker_registry();

const CheckerDef* find_checker(std::string_view id);

/// Runs config.trials trials per grid point for every named checker.
/// A checker's total trial count is trials * |grid|; the global trial index
/// selects the grid point (index / trials) and seeds the trial stream.
/// Failures become full InequalityReports (sorted by checker, then index).
SuiteSummary run_suite(const TrialConfig& config,
                       std::span<const std::string> checker_ids);

/// Re-evaluates a recorded trial; the result must reproduce the recorded
/// margin bit-exactly.
InequalityReport replay(const std::string& checker_id, const TrialInputs& inputs,
                        double tol);

struct SearchRegion {
    std::string checker_id;
    int n = 2;
    int k = 1;
    int l = 1;
    double p = 2.0;
};

/// Random search with multiplicative local refinement around the most
/// negative margin seen. The (p, k) region must lie outside the checker's
/// proven hypothesis (error otherwise). Returns the first strict violation
/// (margin < -10 * tol * scale) or nullopt when the budget is exhausted.
std::optional<InequalityReport> search_counterexample(const SearchRegion& region,
                                                      int budget,
                                                      std::uint64_t seed,
                                                      double tol = 1e-9);

}  // namespace symineq
