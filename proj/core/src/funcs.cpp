#include "symineq/funcs.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace symineq {

namespace detail {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> p_logs(std::span<const double> x, double p, const char* what) {
    require_nonneg(x, what);
    std::vector<double> lx(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0.0) {
            if (p <= 0.0)
                throw std::domain_error(std::string(what) + ": zero entry requires p > 0");
            lx[i] = kNegInf;
        } else {
            lx[i] = p * std::log(x[i]);
        }
    }
    return lx;
}

void check_k(int k, int n, const char* what) {
    if (k < 1 || k > n)
        throw std::domain_error(std::string(what) + ": k must satisfy 1 <= k <= n");
}

}  // namespace

LogValue log_ek_pow(std::span<const double> x, int k, double p) {
    return elem_sym_from_logs(p_logs(x, p, "log_ek_pow"), k);
}

LogValue log_hk_pow(std::span<const double> x, int k, double p) {
    return complete_hom_from_logs(p_logs(x, p, "log_hk_pow"), k);
}

double phi_core(std::span<const double> x, int k, double p) {
    require_strict(x, "phi");
    check_k(k, static_cast<int>(x.size()), "phi");
    if (p == 0.0) throw std::domain_error("phi: p must be nonzero");
    const auto lx = p_logs(x, p, "phi");
    const double lk = elem_sym_from_logs(lx, k).log_magnitude;
    const double lk1 = elem_sym_from_logs(lx, k - 1).log_magnitude;
    return std::exp((lk - lk1) / p);
}

double elem_root_core(std::span<const double> x, int k, double p) {
    check_k(k, static_cast<int>(x.size()), "elem_root");
    if (p == 0.0) throw std::domain_error("elem_root: p must be nonzero");
    const LogValue ek = log_ek_pow(x, k, p);
    if (ek.zero_flag()) return 0.0;
    return std::exp(ek.log_magnitude / (p * k));
}

double big_phi_core(std::span<const double> x, int k, int l, double p) {
    require_strict(x, "big_phi");
    const int n = static_cast<int>(x.size());
    if (l < 1 || l > k || k > n)
        throw std::domain_error("big_phi: require 1 <= l <= k <= n");
    if (p == 0.0) throw std::domain_error("big_phi: p must be nonzero");
    const auto lx = p_logs(x, p, "big_phi");
    const double lk = elem_sym_from_logs(lx, k).log_magnitude;
    const double lkl = elem_sym_from_logs(lx, k - l).log_magnitude;
    return std::exp((lk - lkl) / (l * p));
}

double hom_root_core(std::span<const double> x, int k, double p) {
    require_nonneg(x, "hom_root");
    if (k < 1) throw std::domain_error("hom_root: k must be a positive integer");
    if (p == 0.0) throw std::domain_error("hom_root: p must be nonzero");
    const LogValue hk = log_hk_pow(x, k, p);
    if (hk.zero_flag()) return 0.0;
    return std::exp(hk.log_magnitude / (p * k));
}

double hom_ratio_core(std::span<const double> x, int k, double p) {
    require_strict(x, "hom_ratio");
    if (k < 2) throw std::domain_error("hom_ratio: k must be an integer >= 2");
    if (p == 0.0) throw std::domain_error("hom_ratio: p must be nonzero");
    const auto lx = p_logs(x, p, "hom_ratio");
    const double lk = complete_hom_from_logs(lx, k).log_magnitude;
    const double l1 = complete_hom_from_logs(lx, 1).log_magnitude;
    return std::exp((lk - l1) / (p * (k - 1)));
}

double recip_elem_core(std::span<const double> x, int k, double p) {
    require_strict(x, "recip_elem");
    check_k(k, static_cast<int>(x.size()), "recip_elem");
    if (p == 0.0) throw std::domain_error("recip_elem: p must be nonzero");
    return std::exp(-log_ek_pow(x, k, p).log_magnitude);
}

}  // namespace detail

double phi(std::span<const double> x, int k, double p) {
    if (!(p > 0.0)) throw std::domain_error("phi: p must be positive");
    return detail::phi_core(x, k, p);
}

double elem_root(std::span<const double> x, int k, double p) {
    if (!(p > 0.0)) throw std::domain_error("elem_root: p must be positive");
    return detail::elem_root_core(x, k, p);
}

double big_phi(std::span<const double> x, int k, int l, double p) {
    if (!(p > 0.0)) throw std::domain_error("big_phi: p must be positive");
    return detail::big_phi_core(x, k, l, p);
}

double hom_root(std::span<const double> x, int k, double p) {
    if (!(p >= 1.0)) throw std::domain_error("hom_root: p must satisfy p >= 1");
    return detail::hom_root_core(x, k, p);
}

double hom_ratio(std::span<const double> x, int k, double p) {
    if (!(p >= 1.0)) throw std::domain_error("hom_ratio: p must satisfy p >= 1");
    return detail::hom_ratio_core(x, k, p);
}

double recip_elem(std::span<const double> x, int k, double p) {
    if (!(p > -1.0 && p < 0.0))
        throw std::domain_error("recip_elem: p must lie in the open interval (-1, 0)");
    return detail::recip_elem_core(x, k, p);
}

void RatioSpec::validate(int n) const {
    switch (kind) {
        case RatioKind::ElemRatio:
        case RatioKind::ElemRoot:
            if (!(p > 0.0 && p <= 1.0))
                throw std::domain_error("RatioSpec: ELEM kinds require p in (0, 1]");
            if (k < 1 || k > n)
                throw std::domain_error("RatioSpec: require 1 <= k <= n");
            break;
        case RatioKind::HomRoot:
            if (!(p >= 1.0))
                throw std::domain_error("RatioSpec: HOM kinds require p >= 1");
            if (k < 1) throw std::domain_error("RatioSpec: require integer k >= 1");
            break;
        case RatioKind::HomRatio:
            if (!(p >= 1.0))
                throw std::domain_error("RatioSpec: HOM kinds require p >= 1");
            if (k < 2) throw std::domain_error("RatioSpec: require integer k >= 2");
            break;
        case RatioKind::RecipElem:
            if (!(p > -1.0 && p < 0.0))
                throw std::domain_error("RatioSpec: RECIP_ELEM requires p in (-1, 0)");
            if (k < 1 || k > n)
                throw std::domain_error("RatioSpec: require 1 <= k <= n");
            break;
    }
    if (kind == RatioKind::ElemRatio && (l < 1 || l > k))
        throw std::domain_error("RatioSpec: require 1 <= l <= k");
}

double RatioSpec::evaluate(std::span<const double> x) const {
    validate(static_cast<int>(x.size()));
    switch (kind) {
        case RatioKind::ElemRatio:
            return l == 1 ? phi(x, k, p) : big_phi(x, k, l, p);
        case RatioKind::ElemRoot:
            return elem_root(x, k, p);
        case RatioKind::HomRoot:
            return hom_root(x, k, p);
        case RatioKind::HomRatio:
            return hom_ratio(x, k, p);
        case RatioKind::RecipElem:
            return recip_elem(x, k, p);
    }
    throw std::logic_error("RatioSpec: unknown kind");
}

}  // namespace symineq
