#pragma once

#include <span>

#include "symineq/log_value.hpp"
#include "symineq/sympoly.hpp"

namespace symineq {

/// phi_{k,n}(x) = [e_k(x^p) / e_{k-1}(x^p)]^{1/p}; x strictly positive,
/// 1 <= k <= n, p > 0. Evaluated as a difference of log-scale values.
double phi(std::span<const double> x, int k, double p);

/// [e_k(x^p)]^{1/(pk)}; x nonnegative, 1 <= k <= n, p > 0.
double elem_root(std::span<const double> x, int k, double p);

/// Phi_{k,l,n}(x) = [e_k(x^p) / e_{k-l}(x^p)]^{1/(lp)}; x strictly positive,
/// 1 <= l <= k <= n, p > 0.
double big_phi(std::span<const double> x, int k, int l, double p);

/// [h_k(x^p)]^{1/(pk)}; x nonnegative, integer k >= 1, p >= 1.
double hom_root(std::span<const double> x, int k, double p);

/// [h_k(x^p) / h_1(x^p)]^{1/(p(k-1))}; x strictly positive, integer k >= 2,
/// p >= 1.
double hom_ratio(std::span<const double> x, int k, double p);

/// 1 / e_k(x^p); x strictly positive, 1 <= k <= n, p in (-1, 0).
double recip_elem(std::span<const double> x, int k, double p);

enum class RatioKind { ElemRatio, ElemRoot, HomRoot, HomRatio, RecipElem };

/// A named functional with the exact parameter ranges of the theorem it
/// instantiates. validate() enforces the per-kind p interval (open endpoints
/// excluded; p = 1 admitted for the ELEM kinds, where the classical p = 1
/// results apply).
struct RatioSpec {
    int k = 1;
    int l = 1;
    double p = 1.0;
    RatioKind kind = RatioKind::ElemRatio;

    void validate(int n) const;
    double evaluate(std::span<const double> x) const;
};

namespace detail {

/// log e_k(x^p), computed from p*log(x_i) so no intermediate ever overflows.
LogValue log_ek_pow(std::span<const double> x, int k, double p);
LogValue log_hk_pow(std::span<const double> x, int k, double p);

// The evaluators below check only mathematical domains (positivity, p != 0),
// not theorem hypotheses; verify's out-of-range counterexample search probes
// them beyond the proven intervals.
double phi_core(std::span<const double> x, int k, double p);
double elem_root_core(std::span<const double> x, int k, double p);
double big_phi_core(std::span<const double> x, int k, int l, double p);
double hom_root_core(std::span<const double> x, int k, double p);
double hom_ratio_core(std::span<const double> x, int k, double p);
double recip_elem_core(std::span<const double> x, int k, double p);

}  // namespace detail

}  // namespace symineq
