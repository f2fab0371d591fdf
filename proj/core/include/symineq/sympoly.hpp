#pragma once

#include <span>
#include <vector>

#include "symineq/log_value.hpp"

namespace symineq {

using Vec = std::vector<double>;

/// Throws std::domain_error unless every entry is finite and >= 0 and the
/// vector is nonempty.
void require_nonneg(std::span<const double> x, const char* what);

/// As require_nonneg, but entries must be strictly positive.
void require_strict(std::span<const double> x, const char* what);

/// Elementary symmetric polynomial e_k(x), e_0 = 1. One-pass ascending
/// recurrence E_j += x_m * E_{j-1}; all terms nonnegative, no cancellation.
double elem_sym(std::span<const double> x, int k);

/// e_k on the log scale; never overflows for entries up to e^300 at n <= 64.
LogValue elem_sym_log(std::span<const double> x, int k);

/// e_k when the inputs are already given as natural logs (entries may be
/// -inf, encoding zeros). This is the kernel elem_sym_log wraps.
LogValue elem_sym_from_logs(std::span<const double> log_x, int k);

/// Complete homogeneous symmetric polynomial h_k(x), h_0 = 1, via
/// h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m).
double complete_hom(std::span<const double> x, int k);

LogValue complete_hom_log(std::span<const double> x, int k);
LogValue complete_hom_from_logs(std::span<const double> log_x, int k);

/// Elementwise x_i^p. Zero entries require p > 0.
Vec power_vec(std::span<const double> x, double p);

/// Independent oracle: explicit enumeration of all k-subsets. Shares no
/// arithmetic with elem_sym. Refuses n > 16.
double brute_elem_sym(std::span<const double> x, int k);

/// Independent oracle: enumeration over nondecreasing index tuples.
/// Refuses when C(n+k-1, k) > 1e6.
double brute_complete_hom(std::span<const double> x, int k);

/// Binomial coefficient as a double (exact for the small arguments used here).
double binomial(int n, int k);

}  // namespace symineq
