#include "symineq/parsum.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "symineq/log_value.hpp"
#include "symineq/sympoly.hpp"

namespace symineq {

double par_sum(double x, double y) {
    if (!(x >= 0.0) || !(y >= 0.0))
        throw std::domain_error("par_sum: arguments must be nonnegative");
    if (x == 0.0 || y == 0.0) return 0.0;
    return x * y / (x + y);
}

double p_par_sum(double x, double y, double p) {
    if (!(x > 0.0) || !(y > 0.0))
        throw std::domain_error("p_par_sum: arguments must be strictly positive");
    if (p == 0.0) throw std::domain_error("p_par_sum: p must be nonzero");
    if (p < -1.0) throw std::domain_error("p_par_sum: p must satisfy p >= -1");
    if (p == 1.0) return par_sum(x, y);
    if (p == -1.0) return x + y;
    // (x^{-p} + y^{-p})^{-1/p}, evaluated on the log scale.
    const double l = log_add_exp(-p * std::log(x), -p * std::log(y));
    return std::exp(-l / p);
}

double multi_p_par_sum(std::span<const double> x, double p) {
    require_strict(x, "multi_p_par_sum");
    if (!(p > 0.0)) throw std::domain_error("multi_p_par_sum: p must be positive");
    if (x.size() == 1) return x[0];
    double acc = -p * std::log(x[0]);
    for (size_t i = 1; i < x.size(); ++i)
        acc = log_add_exp(acc, -p * std::log(x[i]));
    return std::exp(-acc / p);
}

Hessian2 hessian_p_par_sum(double x, double y, double p) {
    if (!(x > 0.0) || !(y > 0.0))
        throw std::domain_error("hessian_p_par_sum: arguments must be strictly positive");
    if (p == 0.0) throw std::domain_error("hessian_p_par_sum: p must be nonzero");
    if (p < -1.0) throw std::domain_error("hessian_p_par_sum: p must satisfy p >= -1");
    if (p == -1.0) return {0.0, 0.0, 0.0};
    const double lx = std::log(x), ly = std::log(y);
    // log of (x^p + y^p)^{-2-1/p}
    const double lbase = (-2.0 - 1.0 / p) * log_add_exp(p * lx, p * ly);
    const double lp1 = std::log(p + 1.0);
    Hessian2 h;
    h.dxx = -std::exp(lp1 + (p - 1.0) * lx + (p + 1.0) * ly + lbase);
    h.dyy = -std::exp(lp1 + (p + 1.0) * lx + (p - 1.0) * ly + lbase);
    h.dxy = std::exp(lp1 + p * lx + p * ly + lbase);
    return h;
}

double anderson_psi(std::span<const double> x, int k) {
    require_strict(x, "anderson_psi");
    const int n = static_cast<int>(x.size());
    if (k < 1 || k > n)
        throw std::domain_error("anderson_psi: k must satisfy 1 <= k <= n");
    const double lk = elem_sym_log(x, k).log_magnitude;
    const double lk1 = elem_sym_log(x, k - 1).log_magnitude;
    // C(n,k-1)/C(n,k) = k/(n-k+1)
    return std::exp(lk - lk1 + std::log(static_cast<double>(k)) -
                    std::log(static_cast<double>(n - k + 1)));
}

namespace {

// psi over the subvector selected by mask; k is implied by the popcount
// (every deletion step lowers both the size and the order by one).
double psi_rec(std::span<const double> x, std::uint64_t mask, int k,
               std::unordered_map<std::uint64_t, double>& memo) {
    const int m = std::popcount(mask);
    if (k == 1) {
        double s = 0.0;
        for (int i = 0; i < static_cast<int>(x.size()); ++i)
            if (mask & (1ULL << i)) s += x[i];
        return s / m;
    }
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    double total = 0.0;
    for (int j = 0; j < static_cast<int>(x.size()); ++j) {
        if (!(mask & (1ULL << j))) continue;
        const double prev = psi_rec(x, mask & ~(1ULL << j), k - 1, memo);
        total += par_sum(x[j] / (m - k + 1), prev / (k - 1));
    }
    memo.emplace(mask, total);
    return total;
}

}  // namespace

double anderson_psi_recursive(std::span<const double> x, int k) {
    require_strict(x, "anderson_psi_recursive");
    const int n = static_cast<int>(x.size());
    if (n > 63)
        throw std::domain_error("anderson_psi_recursive: n > 63 unsupported");
    if (k < 2 || k > n)
        throw std::domain_error(
            "anderson_psi_recursive: k must satisfy 2 <= k <= n (use anderson_psi for k = 1)");
    std::unordered_map<std::uint64_t, double> memo;
    const std::uint64_t full = n == 63 ? ~0ULL >> 1 : (1ULL << n) - 1;
    return psi_rec(x, full, k, memo);
}

}  // namespace symineq
