#include "symineq/sympoly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace symineq {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_k_range(std::span<const double> x, int k, bool cap_at_n, const char* fn) {
    if (k < 0 || (cap_at_n && k > static_cast<int>(x.size()))) {
        throw std::domain_error(std::string(fn) + ": k must satisfy 0 <= k <= n, got k=" +
                                std::to_string(k) + " n=" + std::to_string(x.size()));
    }
}

}  // namespace

void require_nonneg(std::span<const double> x, const char* what) {
    if (x.empty())
        throw std::domain_error(std::string(what) + ": vector must have n >= 1");
    for (double v : x) {
        if (!std::isfinite(v) || v < 0.0)
            throw std::domain_error(std::string(what) +
                                    ": entries must be finite and nonnegative");
    }
}

void require_strict(std::span<const double> x, const char* what) {
    if (x.empty())
        throw std::domain_error(std::string(what) + ": vector must have n >= 1");
    for (double v : x) {
        if (!std::isfinite(v) || v <= 0.0)
            throw std::domain_error(std::string(what) +
                                    ": entries must be finite and strictly positive");
    }
}

double elem_sym(std::span<const double> x, int k) {
    require_nonneg(x, "elem_sym");
    check_k_range(x, k, true, "elem_sym");
    std::vector<double> e(static_cast<size_t>(k) + 1, 0.0);
    e[0] = 1.0;
    int seen = 0;
    for (double xm : x) {
        ++seen;
        const int top = std::min(k, seen);
        for (int j = top; j >= 1; --j) e[j] += xm * e[j - 1];
    }
    return e[k];
}

LogValue elem_sym_from_logs(std::span<const double> log_x, int k) {
    if (log_x.empty())
        throw std::domain_error("elem_sym_from_logs: vector must have n >= 1");
    check_k_range(log_x, k, true, "elem_sym_from_logs");
    std::vector<double> e(static_cast<size_t>(k) + 1, kNegInf);
    e[0] = 0.0;
    int seen = 0;
    for (double lx : log_x) {
        ++seen;
        const int top = std::min(k, seen);
        for (int j = top; j >= 1; --j) e[j] = log_add_exp(e[j], lx + e[j - 1]);
    }
    return LogValue::from_log(e[k]);
}

LogValue elem_sym_log(std::span<const double> x, int k) {
    require_nonneg(x, "elem_sym_log");
    std::vector<double> lx(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        lx[i] = x[i] == 0.0 ? kNegInf : std::log(x[i]);
    return elem_sym_from_logs(lx, k);
}

double complete_hom(std::span<const double> x, int k) {
    require_nonneg(x, "complete_hom");
    check_k_range(x, k, false, "complete_hom");
    std::vector<double> h(static_cast<size_t>(k) + 1, 0.0);
    h[0] = 1.0;
    for (double xm : x)
        for (int j = 1; j <= k; ++j) h[j] += xm * h[j - 1];
    return h[k];
}

LogValue complete_hom_from_logs(std::span<const double> log_x, int k) {
    if (log_x.empty())
        throw std::domain_error("complete_hom_from_logs: vector must have n >= 1");
    check_k_range(log_x, k, false, "complete_hom_from_logs");
    std::vector<double> h(static_cast<size_t>(k) + 1, kNegInf);
    h[0] = 0.0;
    for (double lx : log_x)
        for (int j = 1; j <= k; ++j) h[j] = log_add_exp(h[j], lx + h[j - 1]);
    return LogValue::from_log(h[k]);
}

LogValue complete_hom_log(std::span<const double> x, int k) {
    require_nonneg(x, "complete_hom_log");
    std::vector<double> lx(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        lx[i] = x[i] == 0.0 ? kNegInf : std::log(x[i]);
    return complete_hom_from_logs(lx, k);
}

Vec power_vec(std::span<const double> x, double p) {
    require_nonneg(x, "power_vec");
    Vec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0.0 && p <= 0.0)
            throw std::domain_error("power_vec: zero entry requires p > 0");
        out[i] = p == 1.0 ? x[i] : std::pow(x[i], p);
    }
    return out;
}

double brute_elem_sym(std::span<const double> x, int k) {
    require_nonneg(x, "brute_elem_sym");
    const int n = static_cast<int>(x.size());
    if (n > 16)
        throw std::domain_error("brute_elem_sym: refused for n > 16");
    check_k_range(x, k, true, "brute_elem_sym");
    double total = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        double prod = 1.0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) prod *= x[i];
        total += prod;
    }
    return total;
}

namespace {

// Nondecreasing tuples 1 <= i_1 <= ... <= i_k <= n, product accumulated
// along the recursion.
double hom_enumerate(std::span<const double> x, int k, int start, double prod) {
    if (k == 0) return prod;
    double total = 0.0;
    for (int i = start; i < static_cast<int>(x.size()); ++i)
        total += hom_enumerate(x, k - 1, i, prod * x[i]);
    return total;
}

}  // namespace

double brute_complete_hom(std::span<const double> x, int k) {
    require_nonneg(x, "brute_complete_hom");
    check_k_range(x, k, false, "brute_complete_hom");
    const int n = static_cast<int>(x.size());
    if (binomial(n + k - 1, k) > 1e6)
        throw std::domain_error("brute_complete_hom: enumeration bound C(n+k-1,k) > 1e6");
    return hom_enumerate(x, k, 0, 1.0);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

}  // namespace symineq
