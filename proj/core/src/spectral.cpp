#include "symineq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "symineq/log_value.hpp"
#include "symineq/sympoly.hpp"
#include "symineq/threads.hpp"

namespace symineq {

SymMatrix::SymMatrix(int dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim < 1 || entries_.size() != static_cast<size_t>(dim) * dim)
        throw std::domain_error("SymMatrix: entries must be dim x dim with dim >= 1");
    double max_abs = 0.0, max_asym = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const double v = at(i, j);
            if (!std::isfinite(v)) throw std::domain_error("SymMatrix: non-finite entry");
            max_abs = std::max(max_abs, std::abs(v));
            max_asym = std::max(max_asym, std::abs(v - at(j, i)));
        }
    if (max_asym > 1e-12 * max_abs)
        throw std::domain_error("SymMatrix: input is not symmetric");
}

SymMatrix SymMatrix::from_diag(std::span<const double> d) {
    const int n = static_cast<int>(d.size());
    std::vector<double> e(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = d[i];
    return SymMatrix(n, std::move(e));
}

SymMatrix SymMatrix::identity(int dim) {
    std::vector<double> d(static_cast<size_t>(dim), 1.0);
    return from_diag(d);
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : entries_) s += v * v;
    return std::sqrt(s);
}

bool SymMatrix::positive_definite() const {
    return jacobi_eigenvalues(*this).front() > 0.0;
}

SymMatrix sym_add(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) throw std::domain_error("sym_add: dimension mismatch");
    std::vector<double> e(a.entries());
    for (size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
    return SymMatrix(a.dim(), std::move(e));
}

SymMatrix sym_scale(const SymMatrix& a, double t) {
    std::vector<double> e(a.entries());
    for (double& v : e) v *= t;
    return SymMatrix(a.dim(), std::move(e));
}

TallMatrix::TallMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 1 || cols < 1 || cols > rows ||
        entries_.size() != static_cast<size_t>(rows) * cols)
        throw std::domain_error("TallMatrix: need rows >= cols >= 1 and rows*cols entries");
    // numerical-rank check through the spectrum of A^T A
    std::vector<double> g(static_cast<size_t>(cols) * cols, 0.0);
    for (int a = 0; a < cols; ++a)
        for (int b = a; b < cols; ++b) {
            double s = 0.0;
            for (int i = 0; i < rows; ++i) s += at(i, a) * at(i, b);
            g[static_cast<size_t>(a) * cols + b] = s;
            g[static_cast<size_t>(b) * cols + a] = s;
        }
    const auto eig = jacobi_eigenvalues(SymMatrix(cols, std::move(g)));
    if (eig.front() <= 1e-10 * eig.back())
        throw std::domain_error("TallMatrix: not of full column rank");
}

SymMatrix TallMatrix::congruence(const SymMatrix& x) const {
    if (x.dim() != rows_) throw std::domain_error("congruence: dimension mismatch");
    // t = X A (rows x cols), then A^T t
    std::vector<double> t(static_cast<size_t>(rows_) * cols_, 0.0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j) {
            const double xv = x.at(i, j);
            for (int b = 0; b < cols_; ++b)
                t[static_cast<size_t>(i) * cols_ + b] += xv * at(j, b);
        }
    std::vector<double> m(static_cast<size_t>(cols_) * cols_, 0.0);
    for (int a = 0; a < cols_; ++a)
        for (int b = a; b < cols_; ++b) {
            double s = 0.0;
            for (int i = 0; i < rows_; ++i)
                s += at(i, a) * t[static_cast<size_t>(i) * cols_ + b];
            m[static_cast<size_t>(a) * cols_ + b] = s;
            m[static_cast<size_t>(b) * cols_ + a] = s;
        }
    return SymMatrix(cols_, std::move(m));
}

EigDecomp jacobi_decompose(const SymMatrix& x) {
    const int n = x.dim();
    if (n > 64) throw std::domain_error("jacobi_decompose: dim > 64 unsupported");
    std::vector<double> a(x.entries());
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;
    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };

    const double base = x.frobenius_norm();
    bool converged = n == 1;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * A(i, j) * A(i, j);
        if (std::sqrt(off) <= 1e-12 * base) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (apq == 0.0) continue;
                const double h = A(q, q) - A(p, p);
                double t;
                if (std::abs(h) + 100.0 * std::abs(apq) == std::abs(h)) {
                    t = apq / h;
                } else {
                    const double theta = 0.5 * h / apq;
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                A(p, p) -= t * apq;
                A(q, q) += t * apq;
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = A(r, p), arq = A(r, q);
                        A(r, p) = arp - s * (arq + tau * arp);
                        A(p, r) = A(r, p);
                        A(r, q) = arq + s * (arp - tau * arq);
                        A(q, r) = A(r, q);
                    }
                    const double vrp = V(r, p), vrq = V(r, q);
                    V(r, p) = vrp - s * (vrq + tau * vrp);
                    V(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    if (!converged) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * A(i, j) * A(i, j);
        if (std::sqrt(off) > 1e-12 * base)
            throw std::runtime_error("jacobi_decompose: no convergence within 100 sweeps");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return A(i, i) < A(j, j); });
    EigDecomp d;
    d.dim = n;
    d.values.resize(n);
    d.vectors.assign(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        d.values[j] = A(order[j], order[j]);
        for (int i = 0; i < n; ++i)
            d.vectors[static_cast<size_t>(i) * n + j] = V(i, order[j]);
    }
    return d;
}

std::vector<double> jacobi_eigenvalues(const SymMatrix& x) {
    return jacobi_decompose(x).values;
}

namespace {

std::vector<double> pd_eigenvalues(const SymMatrix& x, const char* what) {
    auto vals = jacobi_eigenvalues(x);
    if (vals.front() <= 0.0)
        throw std::domain_error(std::string(what) + ": matrix is not positive definite");
    return vals;
}

double log_ek_of_powered(std::span<const double> eig, int k, double p) {
    std::vector<double> lx(eig.size());
    for (size_t i = 0; i < eig.size(); ++i) lx[i] = p * std::log(eig[i]);
    return elem_sym_from_logs(lx, k).log_magnitude;
}

}  // namespace

SymMatrix matrix_power(const SymMatrix& x, double p) {
    const auto d = jacobi_decompose(x);
    if (d.values.front() <= 0.0)
        throw std::domain_error("matrix_power: matrix is not positive definite");
    const int n = d.dim;
    std::vector<double> lp(n);
    for (int m = 0; m < n; ++m) lp[m] = std::pow(d.values[m], p);
    std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int m = 0; m < n; ++m)
                s += d.vectors[static_cast<size_t>(i) * n + m] * lp[m] *
                     d.vectors[static_cast<size_t>(j) * n + m];
            out[static_cast<size_t>(i) * n + j] = s;
            out[static_cast<size_t>(j) * n + i] = s;
        }
    return SymMatrix(n, std::move(out));
}

double ek_spectral(const SymMatrix& x, int k, double p) {
    if (k < 1 || k > x.dim())
        throw std::domain_error("ek_spectral: k must satisfy 1 <= k <= dim");
    const auto vals = pd_eigenvalues(x, "ek_spectral");
    std::vector<double> powered(vals.size());
    for (size_t i = 0; i < vals.size(); ++i)
        powered[i] = p == 1.0 ? vals[i] : std::pow(vals[i], p);
    return elem_sym(powered, k);
}

InequalityReport check_muir_logconvex(const TallMatrix& a, const SymMatrix& x,
                                      const SymMatrix& y, int k, double p,
                                      double tol) {
    if (!(p >= -1.0 && p < 0.0))
        throw std::domain_error("check_muir_logconvex: p must lie in [-1, 0)");
    if (k < 1 || k > a.cols())
        throw std::domain_error("check_muir_logconvex: k must satisfy 1 <= k <= cols(A)");
    if (x.dim() != y.dim() || x.dim() != a.rows())
        throw std::domain_error("check_muir_logconvex: dimension mismatch");
    const SymMatrix mid = sym_scale(sym_add(x, y), 0.5);
    auto logf = [&](const SymMatrix& z) {
        const auto eig = pd_eigenvalues(a.congruence(z), "check_muir_logconvex");
        return log_ek_of_powered(eig, k, p);
    };
    const double lhs = logf(mid);
    const double rhs = 0.5 * logf(x) + 0.5 * logf(y);
    InequalityReport r;
    r.checker_id = "muir";
    r.inputs.x = x.entries();
    r.inputs.y = y.entries();
    r.inputs.a = a.entries();
    r.inputs.n = x.dim();
    r.inputs.rows = a.rows();
    r.inputs.cols = a.cols();
    r.inputs.k = k;
    r.inputs.p = p;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.pass = r.margin >= -tol * margin_scale(lhs, rhs);
    return r;
}

InequalityReport check_ekmtx_recip_concave(const SymMatrix& x, const SymMatrix& y,
                                           int k, double p, double tol) {
    if (!(p > -1.0 && p < 0.0))
        throw std::domain_error("check_ekmtx_recip_concave: p must lie in (-1, 0)");
    if (x.dim() != y.dim())
        throw std::domain_error("check_ekmtx_recip_concave: dimension mismatch");
    if (k < 1 || k > x.dim())
        throw std::domain_error("check_ekmtx_recip_concave: k must satisfy 1 <= k <= dim");
    const SymMatrix mid = sym_scale(sym_add(x, y), 0.5);
    auto f = [&](const SymMatrix& z) {
        const auto eig = pd_eigenvalues(z, "check_ekmtx_recip_concave");
        return std::exp(-log_ek_of_powered(eig, k, p));
    };
    const double lhs = f(mid);
    const double rhs = 0.5 * f(x) + 0.5 * f(y);
    InequalityReport r;
    r.checker_id = "ekmtx";
    r.inputs.x = x.entries();
    r.inputs.y = y.entries();
    r.inputs.n = x.dim();
    r.inputs.k = k;
    r.inputs.p = p;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = lhs - rhs;
    r.pass = r.margin >= -tol * margin_scale(lhs, rhs);
    return r;
}

SymMatrix random_spd(RngStream& stream, int dim, double lo, double hi) {
    if (dim < 1 || dim > 64) throw std::domain_error("random_spd: dim must lie in [1, 64]");
    if (!(lo > 0.0) || !(hi >= lo))
        throw std::domain_error("random_spd: spectrum range must satisfy 0 < lo <= hi");
    std::vector<double> lambda(dim);
    for (double& l : lambda) l = stream.log_uniform(lo, hi);
    // Q as a product of dim^2 random Givens rotations applied to the identity
    std::vector<double> q(static_cast<size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) q[static_cast<size_t>(i) * dim + i] = 1.0;
    if (dim > 1) {
        for (int r = 0; r < dim * dim; ++r) {
            const int i = stream.uniform_int(0, dim - 2);
            const int j = stream.uniform_int(i + 1, dim - 1);
            const double th = stream.uniform(0.0, 2.0 * 3.14159265358979323846);
            const double c = std::cos(th), s = std::sin(th);
            for (int row = 0; row < dim; ++row) {
                double& qi = q[static_cast<size_t>(row) * dim + i];
                double& qj = q[static_cast<size_t>(row) * dim + j];
                const double a = qi, b = qj;
                qi = c * a - s * b;
                qj = s * a + c * b;
            }
        }
    }
    std::vector<double> m(static_cast<size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            double s = 0.0;
            for (int t = 0; t < dim; ++t)
                s += q[static_cast<size_t>(i) * dim + t] * lambda[t] *
                     q[static_cast<size_t>(j) * dim + t];
            m[static_cast<size_t>(i) * dim + j] = s;
            m[static_cast<size_t>(j) * dim + i] = s;
        }
    return SymMatrix(dim, std::move(m));
}

SymMatrix random_spd(int dim, std::uint64_t seed, double lo, double hi) {
    RngStream stream(mix64(seed));
    return random_spd(stream, dim, lo, hi);
}

TallMatrix random_tall(RngStream& stream, int rows, int cols) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<double> e(static_cast<size_t>(rows) * cols);
        for (double& v : e) v = stream.uniform(-1.0, 1.0);
        try {
            return TallMatrix(rows, cols, std::move(e));
        } catch (const std::domain_error&) {
            // rank-deficient draw; take the next one
        }
    }
    throw std::runtime_error("random_tall: failed to draw a full-rank matrix");
}

std::vector<double> matrix_default_p_grid(const std::string& check) {
    if (check == "muir") return {-1.0};
    if (check == "mariet") return {-0.5, -0.1};
    if (check == "ekmtx") return {-0.9, -0.5, -0.1};
    throw std::domain_error("unknown matrix check '" + check + "'");
}

bool matrix_p_valid(const std::string& check, double p) {
    if (check == "muir" || check == "mariet") return p >= -1.0 && p < 0.0;
    if (check == "ekmtx") return p > -1.0 && p < 0.0;
    throw std::domain_error("unknown matrix check '" + check + "'");
}

namespace {

// Largest k <= n with p >= -1/k: the reciprocal-concavity hypothesis is
// k-dependent (the geometric-mean concavity threshold), exactly as for the
// vector recip-ek checker.
int recip_k_cap(int n, double p) {
    int hi = 0;
    for (int k = 1; k <= n; ++k)
        if (p >= -1.0 / k) hi = k;
    return hi;
}

TrialInputs sample_matrix_trial(RngStream& stream, const MatrixSuiteConfig& cfg,
                                int dim, double p) {
    TrialInputs in;
    in.p = p;
    in.n = dim;
    if (cfg.check == "ekmtx") {
        const int cap = recip_k_cap(dim, p);
        if (cap < 1)
            throw std::domain_error("matrix suite: no k satisfies p >= -1/k at this p");
        in.k = cfg.k_fixed > 0 ? cfg.k_fixed : stream.uniform_int(1, cap);
        if (in.k > cap)
            throw std::domain_error(
                "matrix suite: fixed k violates the ekmtx hypothesis k <= 1/|p|");
    } else {
        int cols;
        if (cfg.k_fixed > 0) {
            if (cfg.k_fixed > dim)
                throw std::domain_error("matrix suite: fixed k exceeds dim");
            cols = stream.uniform_int(cfg.k_fixed, dim);
            in.k = cfg.k_fixed;
        } else {
            cols = stream.uniform_int(1, dim);
            in.k = stream.uniform_int(1, cols);
        }
        in.rows = dim;
        in.cols = cols;
        in.a = random_tall(stream, dim, cols).entries();
    }
    in.x = random_spd(stream, dim, cfg.spectrum_lo, cfg.spectrum_hi).entries();
    in.y = random_spd(stream, dim, cfg.spectrum_lo, cfg.spectrum_hi).entries();
    return in;
}

InequalityReport evaluate_matrix(const std::string& check, const TrialInputs& in,
                                 double tol) {
    const SymMatrix x(in.n, in.x);
    const SymMatrix y(in.n, in.y);
    InequalityReport rep;
    if (check == "ekmtx") {
        rep = check_ekmtx_recip_concave(x, y, in.k, in.p, tol);
    } else {
        const TallMatrix a(in.rows, in.cols, in.a);
        rep = check_muir_logconvex(a, x, y, in.k, in.p, tol);
        rep.checker_id = check;
    }
    return rep;
}

}  // namespace

SuiteSummary run_matrix_suite(const MatrixSuiteConfig& config) {
    if (config.trials < 1)
        throw std::domain_error("matrix suite: trials must be >= 1");
    if (config.dims.empty())
        throw std::domain_error("matrix suite: no dimensions given");
    for (int d : config.dims)
        if (d < 1 || d > 64)
            throw std::domain_error("matrix suite: dims must lie in [1, 64]");
    const std::vector<double> grid =
        config.p_grid.empty() ? matrix_default_p_grid(config.check) : config.p_grid;
    for (double p : grid)
        if (!matrix_p_valid(config.check, p))
            throw std::domain_error("matrix suite: p = " + std::to_string(p) +
                                    " invalid for check '" + config.check + "'");

    const std::uint64_t per_p =
        static_cast<std::uint64_t>(config.trials) * config.dims.size();
    const std::uint64_t total = per_p * grid.size();

    auto run_one = [&](std::uint64_t t) {
        RngStream stream = trial_stream(config.seed, config.check, t);
        const double p = grid[t / per_p];
        const int dim = config.dims[(t % per_p) / config.trials];
        TrialInputs in = sample_matrix_trial(stream, config, dim, p);
        InequalityReport rep = evaluate_matrix(config.check, in, config.tolerance);
        rep.trial_index = t;
        return rep;
    };

    std::vector<double> margin(total), norm(total);
    std::vector<char> pass(total);
    parallel_for(total, [&](std::uint64_t t) {
        InequalityReport rep = run_one(t);
        margin[t] = rep.margin;
        norm[t] = rep.margin / margin_scale(rep.lhs, rep.rhs);
        pass[t] = rep.pass ? 1 : 0;
    });

    SuiteSummary summary;
    CheckerSummary cs;
    cs.trials = total;
    for (std::uint64_t t = 0; t < total; ++t) {
        if (pass[t]) ++cs.passes;
        if (t == 0 || norm[t] < norm[cs.worst_trial_index]) {
            cs.worst_trial_index = t;
            cs.worst_margin = margin[t];
        }
    }
    for (std::uint64_t t = 0; t < total; ++t)
        if (!pass[t]) summary.violations.push_back(run_one(t));
    summary.checkers.emplace(config.check, cs);
    return summary;
}

InequalityReport replay_matrix(const std::string& check, const TrialInputs& inputs,
                               double tol) {
    return evaluate_matrix(check, inputs, tol);
}

}  // namespace symineq
