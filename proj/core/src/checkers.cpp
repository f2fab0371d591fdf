#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "symineq/funcs.hpp"
#include "symineq/log_value.hpp"
#include "symineq/parsum.hpp"
#include "symineq/report.hpp"
#include "symineq/sympoly.hpp"
#include "symineq/verify.hpp"

namespace symineq {

namespace {

InequalityReport make_report(std::span<const double> x, std::span<const double> y,
                             double lhs, double rhs, double margin, double tol) {
    InequalityReport r;
    r.inputs.x.assign(x.begin(), x.end());
    r.inputs.y.assign(y.begin(), y.end());
    r.inputs.n = static_cast<int>(x.size());
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = margin;
    r.pass = margin >= -tol * margin_scale(lhs, rhs);
    return r;
}

Vec add_vec(std::span<const double> x, std::span<const double> y, const char* what) {
    if (x.size() != y.size())
        throw std::domain_error(std::string(what) + ": x and y must have the same length");
    Vec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

}  // namespace

InequalityReport check_superadditive(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, std::span<const double> y, double tol) {
    const Vec z = add_vec(x, y, "check_superadditive");
    const double lhs = f(z);
    const double rhs = f(x) + f(y);
    auto r = make_report(x, y, lhs, rhs, lhs - rhs, tol);
    r.checker_id = "superadditive";
    return r;
}

InequalityReport check_subadditive(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, std::span<const double> y, double tol) {
    const Vec z = add_vec(x, y, "check_subadditive");
    const double lhs = f(z);
    const double rhs = f(x) + f(y);
    auto r = make_report(x, y, lhs, rhs, rhs - lhs, tol);
    r.checker_id = "subadditive";
    return r;
}

InequalityReport check_recip_concave(std::span<const double> x,
                                     std::span<const double> y, int k, double p,
                                     double tol) {
    require_strict(x, "check_recip_concave");
    require_strict(y, "check_recip_concave");
    if (p == 0.0) throw std::domain_error("check_recip_concave: p must be nonzero");
    const Vec mid = [&] {
        Vec m = add_vec(x, y, "check_recip_concave");
        for (double& v : m) v *= 0.5;
        return m;
    }();
    const double fmid = detail::log_ek_pow(mid, k, p).value();
    const double fx = detail::log_ek_pow(x, k, p).value();
    const double fy = detail::log_ek_pow(y, k, p).value();
    const double rhs = 2.0 * par_sum(fx, fy);  // harmonic mean H(fx, fy)
    auto r = make_report(x, y, fmid, rhs, rhs - fmid, tol);
    r.checker_id = "recip-concave";
    r.inputs.k = k;
    r.inputs.p = p;
    return r;
}

namespace {

// [(u^{pk} + v^{pk}) / (u^p + v^p)]^expo with the u = v = 0 continuity limit.
double dresher_term(double u, double v, int k, double p, double expo) {
    if (u == 0.0 && v == 0.0) return 0.0;
    const double num = std::pow(u, p * k) + std::pow(v, p * k);
    const double den = std::pow(u, p) + std::pow(v, p);
    return std::pow(num / den, expo);
}

}  // namespace

InequalityReport check_dresher_scalar(double a, double b, double c, double d,
                                      int k, double p, double tol,
                                      DresherForm form) {
    for (double v : {a, b, c, d})
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::domain_error("check_dresher_scalar: inputs must be nonnegative");
    if (k < 2) throw std::domain_error("check_dresher_scalar: k must be an integer >= 2");
    if (!(p > 0.0)) throw std::domain_error("check_dresher_scalar: p must be positive");
    if (a == 0.0 && b == 0.0 && c == 0.0 && d == 0.0)
        throw std::domain_error("check_dresher_scalar: all inputs zero");

    const double ab = std::pow(a, p) + std::pow(b, p);
    const double cd = std::pow(c, p) + std::pow(d, p);
    const double num = std::pow(ab, k) + std::pow(cd, k);
    double lhs, rhs;
    if (form == DresherForm::RatioDenominator) {
        const double expo = 1.0 / (p * (k - 1));
        const double den = std::pow(a + b, p) + std::pow(c + d, p);
        lhs = std::pow(num / den, expo);
        rhs = dresher_term(a, c, k, p, expo) + dresher_term(b, d, k, p, expo);
    } else {
        const double expo = 1.0 / (k - 1);
        const double den = ab + cd;
        lhs = std::pow(num / den, expo);
        rhs = dresher_term(a, c, k, p, expo) + dresher_term(b, d, k, p, expo);
    }
    const double xs[] = {a, c};
    const double ys[] = {b, d};
    auto r = make_report(xs, ys, lhs, rhs, rhs - lhs, tol);
    r.checker_id = "dresher";
    r.inputs.k = k;
    r.inputs.p = p;
    r.inputs.variant = form == DresherForm::RatioDenominator ? "ratio-den" : "power-sum-den";
    return r;
}

InequalityReport check_mixed_minkowski(std::span<const double> xmat,
                                       std::span<const double> ymat, int rows,
                                       int cols, int k, double p, double tol) {
    if (rows < 1 || cols < 1 ||
        xmat.size() != static_cast<size_t>(rows) * cols || xmat.size() != ymat.size())
        throw std::domain_error("check_mixed_minkowski: shape mismatch");
    require_nonneg(xmat, "check_mixed_minkowski");
    require_nonneg(ymat, "check_mixed_minkowski");
    if (k < 1) throw std::domain_error("check_mixed_minkowski: k must be >= 1");
    if (!(p > 0.0)) throw std::domain_error("check_mixed_minkowski: p must be positive");

    double lhs_sum = 0.0, xs = 0.0, ys = 0.0;
    for (int i = 0; i < rows; ++i) {
        double row = 0.0, xrow = 0.0, yrow = 0.0;
        for (int j = 0; j < cols; ++j) {
            const double xv = xmat[static_cast<size_t>(i) * cols + j];
            const double yv = ymat[static_cast<size_t>(i) * cols + j];
            row += std::pow(xv, p) + std::pow(yv, p);
            xrow += xv;
            yrow += yv;
        }
        lhs_sum += std::pow(row, k);
        xs += std::pow(xrow, p * k);
        ys += std::pow(yrow, p * k);
    }
    const double expo = 1.0 / (p * k);
    const double lhs = std::pow(lhs_sum, expo);
    const double rhs = std::pow(xs, expo) + std::pow(ys, expo);
    auto r = make_report(xmat, ymat, lhs, rhs, rhs - lhs, tol);
    r.checker_id = "mixed-minkowski";
    r.inputs.n = rows * cols;
    r.inputs.rows = rows;
    r.inputs.cols = cols;
    r.inputs.k = k;
    r.inputs.p = p;
    return r;
}

// --- registry ---------------------------------------------------------------

namespace {

double draw_entry(RngStream& s, const TrialConfig& c) {
    return c.dist == EntryDistribution::LogUniform
               ? s.log_uniform(c.entry_lo, c.entry_hi)
               : s.uniform(c.entry_lo, c.entry_hi);
}

TrialInputs sample_pair(RngStream& s, const TrialConfig& c, double p) {
    TrialInputs in;
    in.p = p;
    in.n = s.uniform_int(c.n_lo, c.n_hi);
    in.x.resize(in.n);
    in.y.resize(in.n);
    for (double& v : in.x) v = draw_entry(s, c);
    for (double& v : in.y) v = draw_entry(s, c);
    return in;
}

TrialInputs sample_dresher(RngStream& s, const TrialConfig& c, double p) {
    TrialInputs in;
    in.p = p;
    in.n = 2;
    in.x = {draw_entry(s, c), draw_entry(s, c)};
    in.y = {draw_entry(s, c), draw_entry(s, c)};
    return in;
}

TrialInputs sample_matrix_pair(RngStream& s, const TrialConfig& c, double p) {
    TrialInputs in;
    in.p = p;
    in.rows = s.uniform_int(c.n_lo, c.n_hi);
    in.cols = s.uniform_int(c.n_lo, c.n_hi);
    in.n = in.rows * in.cols;
    in.x.resize(in.n);
    in.y.resize(in.n);
    for (double& v : in.x) v = draw_entry(s, c);
    for (double& v : in.y) v = draw_entry(s, c);
    return in;
}

// p-range predicates: *_proven mirrors the theorem hypothesis, the paired
// evaluable predicate is the mathematical domain the evaluator accepts.
bool p_is_one(double p) { return p == 1.0; }
bool p_unit(double p) { return p > 0.0 && p <= 1.0; }
bool p_pos(double p) { return p > 0.0; }
bool p_ge1(double p) { return p >= 1.0; }
bool p_open_neg(double p) { return p > -1.0 && p < 0.0; }
bool p_nonzero(double p) { return p != 0.0; }

void k_full(int n, int& lo, int& hi) { lo = 1; hi = n; }
void k_full_p(int n, double, int& lo, int& hi) { lo = 1; hi = n; }
void k_none(int, int& lo, int& hi) { lo = 0; hi = -1; }
void k_none_p(int, double, int& lo, int& hi) { lo = 0; hi = -1; }
void k_any(int, int& lo, int& hi) { lo = 1; hi = 64; }
void k_any_p(int, double, int& lo, int& hi) { lo = 1; hi = 64; }
void k_any2(int, int& lo, int& hi) { lo = 2; hi = 64; }
void k_any2_p(int, double, int& lo, int& hi) { lo = 2; hi = 64; }
void k_hom_trial(int, double, int& lo, int& hi) { lo = 1; hi = 8; }
void k_hom_ratio_trial(int, double, int& lo, int& hi) { lo = 2; hi = 8; }
void k_dresher_trial(int, double, int& lo, int& hi) { lo = 2; hi = 6; }
void k_mixed_trial(int, double, int& lo, int& hi) { lo = 1; hi = 6; }

// Reciprocal concavity of e_k(x^p) needs the monomial power |p| <= 1/k
// (the geometric-mean concavity threshold), so the hypothesis range of k
// depends on p.
void k_recip(int n, double p, int& lo, int& hi) {
    lo = 1;
    hi = 0;
    for (int k = 1; k <= n; ++k)
        if (p >= -1.0 / k) hi = k;
}

InequalityReport eval_phi_super(const TrialInputs& in, double tol, const char* id) {
    const int k = in.k;
    const double p = in.p;
    auto rep = check_superadditive(
        [k, p](std::span<const double> v) { return detail::phi_core(v, k, p); },
        in.x, in.y, tol);
    rep.checker_id = id;
    rep.inputs = in;
    return rep;
}

InequalityReport eval_ml_orig(const TrialInputs& in, double tol) {
    return eval_phi_super(in, tol, "ml-orig");
}

InequalityReport eval_ml_new(const TrialInputs& in, double tol) {
    return eval_phi_super(in, tol, "ml-new");
}

InequalityReport eval_ek_root(const TrialInputs& in, double tol) {
    const int k = in.k;
    const double p = in.p;
    auto rep = check_superadditive(
        [k, p](std::span<const double> v) { return detail::elem_root_core(v, k, p); },
        in.x, in.y, tol);
    rep.checker_id = "ek-root";
    rep.inputs = in;
    return rep;
}

InequalityReport eval_big_phi(const TrialInputs& in, double tol) {
    const int k = in.k, l = in.l;
    const double p = in.p;
    auto rep = check_superadditive(
        [k, l, p](std::span<const double> v) { return detail::big_phi_core(v, k, l, p); },
        in.x, in.y, tol);
    rep.checker_id = "big-phi";
    rep.inputs = in;
    return rep;
}

InequalityReport eval_multi_ppsum(const TrialInputs& in, double tol) {
    const double p = in.p;
    auto f = [p](std::span<const double> v) {
        if (p > 0.0) return multi_p_par_sum(v, p);
        // analytic continuation used only by out-of-range search
        require_strict(v, "multi_p_par_sum");
        if (v.size() == 1) return v[0];
        double acc = -p * std::log(v[0]);
        for (size_t i = 1; i < v.size(); ++i)
            acc = log_add_exp(acc, -p * std::log(v[i]));
        return std::exp(-acc / p);
    };
    auto rep = check_superadditive(f, in.x, in.y, tol);
    rep.checker_id = "multi-ppsum";
    rep.inputs = in;
    return rep;
}

InequalityReport eval_hom_sub(const TrialInputs& in, double tol, const char* id) {
    const int k = in.k;
    const double p = in.p;
    auto rep = check_subadditive(
        [k, p](std::span<const double> v) { return detail::hom_root_core(v, k, p); },
        in.x, in.y, tol);
    rep.checker_id = id;
    rep.inputs = in;
    return rep;
}

InequalityReport eval_hk_mcleod(const TrialInputs& in, double tol) {
    return eval_hom_sub(in, tol, "hk-mcleod");
}

InequalityReport eval_hk_root(const TrialInputs& in, double tol) {
    return eval_hom_sub(in, tol, "hk-root");
}

InequalityReport eval_hk_ratio(const TrialInputs& in, double tol) {
    const int k = in.k;
    const double p = in.p;
    auto rep = check_subadditive(
        [k, p](std::span<const double> v) { return detail::hom_ratio_core(v, k, p); },
        in.x, in.y, tol);
    rep.checker_id = "hk-ratio";
    rep.inputs = in;
    return rep;
}

InequalityReport eval_recip_ek(const TrialInputs& in, double tol) {
    auto rep = check_recip_concave(in.x, in.y, in.k, in.p, tol);
    rep.checker_id = "recip-ek";
    rep.inputs = in;
    return rep;
}

InequalityReport eval_dresher(const TrialInputs& in, double tol) {
    const double a = in.x.at(0), c = in.x.at(1);
    const double b = in.y.at(0), d = in.y.at(1);
    auto run = [&](DresherForm form) {
        auto rep = check_dresher_scalar(a, b, c, d, in.k, in.p, tol, form);
        auto variant = rep.inputs.variant;
        rep.inputs = in;
        rep.inputs.variant = variant;
        return rep;
    };
    if (in.variant == "ratio-den") return run(DresherForm::RatioDenominator);
    if (in.variant == "power-sum-den") return run(DresherForm::PowerSumDenominator);
    // fresh trial: the trial covers both forms and reports the tighter one
    auto ra = run(DresherForm::RatioDenominator);
    auto rp = run(DresherForm::PowerSumDenominator);
    const double na = ra.margin / margin_scale(ra.lhs, ra.rhs);
    const double np = rp.margin / margin_scale(rp.lhs, rp.rhs);
    auto rep = np < na ? rp : ra;
    rep.pass = ra.pass && rp.pass;
    return rep;
}

InequalityReport eval_mixed_minkowski(const TrialInputs& in, double tol) {
    auto rep = check_mixed_minkowski(in.x, in.y, in.rows, in.cols, in.k, in.p, tol);
    rep.inputs = in;
    return rep;
}

const std::vector<CheckerDef> kRegistry = {
    {"ml-orig", "Marcus-Lopes: e_k/e_{k-1} superadditive at p = 1",
     {1.0}, p_is_one, p_pos, sample_pair, k_full, k_full_p, k_full_p, false,
     eval_ml_orig},
    {"ml-new", "phi_{k,n} = [e_k(x^p)/e_{k-1}(x^p)]^{1/p} superadditive, p in (0,1]",
     {0.1, 0.25, 0.5, 0.75, 0.9}, p_unit, p_pos, sample_pair, k_full, k_full_p,
     k_full_p, false, eval_ml_new},
    {"ek-root", "[e_k(x^p)]^{1/(pk)} superadditive, p in (0,1]",
     {0.1, 0.25, 0.5, 0.75, 0.9}, p_unit, p_pos, sample_pair, k_full, k_full_p,
     k_full_p, false, eval_ek_root},
    {"big-phi", "Phi_{k,l,n} = [e_k(x^p)/e_{k-l}(x^p)]^{1/(lp)} superadditive, p in (0,1]",
     {0.1, 0.25, 0.5, 0.75, 0.9}, p_unit, p_pos, sample_pair, k_full, k_full_p,
     k_full_p, true, eval_big_phi},
    {"multi-ppsum", "multivariate p-parallel sum superadditive, p > 0",
     {0.1, 0.25, 0.5, 0.75, 0.9}, p_pos, p_nonzero, sample_pair, k_none, k_none_p,
     k_none_p, false, eval_multi_ppsum},
    {"hk-mcleod", "McLeod: h_k(x)^{1/k} subadditive (p = 1)",
     {1.0}, p_is_one, p_pos, sample_pair, k_any, k_any_p, k_hom_trial, false,
     eval_hk_mcleod},
    {"hk-root", "[h_k(x^p)]^{1/(pk)} subadditive, p >= 1",
     {1.0, 1.5, 2.0, 3.0}, p_ge1, p_pos, sample_pair, k_any, k_any_p, k_hom_trial,
     false, eval_hk_root},
    {"hk-ratio", "[h_k(x^p)/h_1(x^p)]^{1/(p(k-1))} subadditive, p >= 1",
     {1.0, 1.5, 2.0, 3.0}, p_ge1, p_pos, sample_pair, k_any2, k_any2_p,
     k_hom_ratio_trial, false, eval_hk_ratio},
    {"recip-ek",
     "e_k(x^p) reciprocally concave (harmonic-mean bound), p in (-1,0), k <= 1/|p|",
     {-0.9, -0.5, -0.1}, p_open_neg, p_nonzero, sample_pair, k_full, k_recip,
     k_recip, false, eval_recip_ek},
    {"dresher", "scalar Dresher inequalities (ratio and power-sum denominators), p >= 1",
     {1.0, 1.5, 2.0, 3.0}, p_ge1, p_pos, sample_dresher, k_any2, k_any2_p,
     k_dresher_trial, false, eval_dresher},
    {"mixed-minkowski", "mixed Minkowski inequality for nonnegative matrices, p >= 1",
     {1.0, 1.5, 2.0, 3.0}, p_ge1, p_pos, sample_matrix_pair, k_any, k_any_p,
     k_mixed_trial, false, eval_mixed_minkowski},
};

}  // namespace

std::span<const CheckerDef> checker_registry() { return kRegistry; }

const CheckerDef* find_checker(std::string_view id) {
    for (const auto& def : kRegistry)
        if (def.id == id) return &def;
    return nullptr;
}

}  // namespace symineq
