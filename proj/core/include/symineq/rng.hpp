#pragma once

#include <cstdint>
#include <string_view>

namespace symineq {

/// splitmix64 finalizer; full-avalanche 64-bit mix.
std::uint64_t mix64(std::uint64_t z);

/// FNV-1a hash of a checker id (or any short string).
std::uint64_t fnv1a64(std::string_view s);

/// Deterministic stream of pseudo-random draws (splitmix64 sequence).
/// All mapping to doubles/ints is done here, never through the standard
/// <random> distributions, so draws are bit-identical across platforms and
/// standard libraries.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit();

    double uniform(double lo, double hi);

    /// exp(uniform(log lo, log hi)); lo, hi > 0.
    double log_uniform(double lo, double hi);

    /// Uniform integer in [lo, hi] inclusive; unbiased (rejection).
    int uniform_int(int lo, int hi);

  private:
    std::uint64_t state_;
};

/// The fixed per-trial seed derivation: avalanche mix of
/// (seed, checker-id hash, trial index). Reproducible and independent of
/// execution order, so trials can run on any thread in any order.
RngStream trial_stream(std::uint64_t seed, std::string_view checker_id,
                       std::uint64_t trial_index);

}  // namespace symineq
