#pragma once

#include <cstdint>
#include <span>

#include "symineq/rng.hpp"

namespace symineq {

/// Monte Carlo estimate of h_k(x) through the exponential representation
/// h_k(x) = E[(xi . x)^k] / k! with xi_i standard exponentials.
struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    int k = 0;
};

/// Inverse-CDF draw -ln(1 - u), u uniform in [0, 1); mean 1, variance 1.
/// Exactly one stream draw per call, so sample streams are seed-stable.
double sample_exponential(RngStream& stream);

/// Welford-accumulated estimator; sample blocks run in parallel from
/// block-derived seeds and are merged in block order, so the result is
/// bit-identical for any thread count. Throws std::overflow_error when
/// (xi . x)^k overflows; rescale via homogeneity (estimate on x/max(x),
/// multiply by max(x)^k).
McEstimate estimate_hk(std::span<const double> x, int k, std::uint64_t samples,
                       std::uint64_t seed);

}  // namespace symineq
