#pragma once

// Test-side oracles. These share no arithmetic with the library code paths
// they check: the p-parallel sum is evaluated by the direct power formula in
// quad precision, and the Hessian oracle is plain central differencing.

#include <quadmath.h>

#include <algorithm>
#include <cmath>

namespace oracle {

inline __float128 p_par_sum_q(__float128 x, __float128 y, __float128 p) {
    if (p == __float128(1.0)) return x * y / (x + y);
    if (p == __float128(-1.0)) return x + y;
    return powq(powq(x, -p) + powq(y, -p), __float128(-1.0) / p);
}

struct Hessian {
    double dxx, dxy, dyy;
};

// Central differences with per-coordinate relative steps 1e-5*x and 1e-5*y.
// Two details matter at the log-uniform extremes: a max(x,y)-based step
// loses the small coordinate entirely (truncation ~ (h/min)^2), and in
// double or extended precision the second-difference roundoff eps*f/h^2
// swamps weak-curvature entries; quad precision leaves ~1e-9 headroom
// against the 1e-6 comparison tolerance.
inline Hessian fd_hessian_p_par_sum(double x, double y, double p) {
    const __float128 qx = x, qy = y, qp = p;
    const __float128 hx = __float128(1e-5) * qx;
    const __float128 hy = __float128(1e-5) * qy;
    auto f = [&](__float128 a, __float128 b) { return p_par_sum_q(a, b, qp); };
    Hessian out;
    out.dxx = static_cast<double>(
        (f(qx + hx, qy) - __float128(2.0) * f(qx, qy) + f(qx - hx, qy)) / (hx * hx));
    out.dyy = static_cast<double>(
        (f(qx, qy + hy) - __float128(2.0) * f(qx, qy) + f(qx, qy - hy)) / (hy * hy));
    out.dxy = static_cast<double>((f(qx + hx, qy + hy) - f(qx + hx, qy - hy) -
                                   f(qx - hx, qy + hy) + f(qx - hx, qy - hy)) /
                                  (__float128(4.0) * hx * hy));
    return out;
}

// Entrywise comparison at relative tolerance tol, with a curvature floor
// |f|/min(x,y)^2 * 1e-9*tol-ish so identically-zero entries (p = -1) do not
// divide by zero.
inline bool hessian_close(const Hessian& a, const Hessian& fd, double x, double y,
                          double p, double tol) {
    const double f = static_cast<double>(p_par_sum_q(x, y, p));
    const double floor = 1e-9 * std::abs(f) / (std::min(x, y) * std::min(x, y));
    auto entry_ok = [&](double u, double v) {
        return std::abs(u - v) <= tol * std::max({std::abs(u), std::abs(v), floor});
    };
    return entry_ok(a.dxx, fd.dxx) && entry_ok(a.dyy, fd.dyy) && entry_ok(a.dxy, fd.dxy);
}

inline bool rel_close(double a, double b, double tol) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

}  // namespace oracle
