#pragma once

#include <span>

namespace symineq {

/// Parallel sum x : y = (1/x + 1/y)^{-1} = xy/(x+y). Extended by continuity
/// to 0 when either argument is 0. Negative inputs are rejected.
double par_sum(double x, double y);

/// p-parallel sum [x^p : y^p]^{1/p} for p >= -1, p != 0; x, y > 0.
/// Reduces to par_sum at p = 1 and to x + y at p = -1.
double p_par_sum(double x, double y, double p);

/// Multivariate p-parallel sum [x_1^p : ... : x_n^p]^{1/p}
/// = (sum_i x_i^{-p})^{-1/p}; x strictly positive, p > 0.
double multi_p_par_sum(std::span<const double> x, double p);

struct Hessian2 {
    double dxx, dxy, dyy;
};

/// Closed-form Hessian of (x, y) -> x :_p y for p >= -1:
///   dxx = -(p+1) x^{p-1} y^{p+1} (x^p+y^p)^{-2-1/p}
///   dyy = -(p+1) x^{p+1} y^{p-1} (x^p+y^p)^{-2-1/p}
///   dxy = +(p+1) x^p y^p (x^p+y^p)^{-2-1/p}
/// Negative semidefinite with zero determinant (the map is 1-homogeneous).
Hessian2 hessian_p_par_sum(double x, double y, double p);

/// psi_{k,n}(x) = C(n,k-1) e_k(x) / (C(n,k) e_{k-1}(x))
///             = k e_k(x) / ((n-k+1) e_{k-1}(x)), for 1 <= k <= n.
double anderson_psi(std::span<const double> x, int k);

/// The parallel-sum recursion for psi_{k,n}:
///   psi_{k,n}(x) = sum_j [x_j / (n-k+1)] : [psi_{k-1,n-1}(x_[j]) / (k-1)]
/// over deleted-coordinate vectors x_[j], recursing down to the k = 1 base
/// case (the mean). Memoized over index subsets; requires 2 <= k <= n <= 63.
double anderson_psi_recursive(std::span<const double> x, int k);

}  // namespace symineq
