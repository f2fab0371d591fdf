#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symineq/report.hpp"
#include "symineq/rng.hpp"

namespace symineq {

/// Dense real symmetric matrix, row-major. Construction validates symmetry
/// to ||A - A^T||_max <= 1e-12 ||A||_max.
class SymMatrix {
  public:
    SymMatrix() = default;
    SymMatrix(int dim, std::vector<double> entries);

    static SymMatrix from_diag(std::span<const double> d);
    static SymMatrix identity(int dim);

    int dim() const { return dim_; }
    double at(int i, int j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }
    double& at(int i, int j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }
    const std::vector<double>& entries() const { return entries_; }

    double frobenius_norm() const;

    /// All eigenvalues strictly positive (checked through the eigensolver).
    bool positive_definite() const;

  private:
    int dim_ = 0;
    std::vector<double> entries_;
};

SymMatrix sym_add(const SymMatrix& a, const SymMatrix& b);
SymMatrix sym_scale(const SymMatrix& a, double t);

/// Tall real matrix (rows >= cols), row-major; full column rank required
/// (smallest eigenvalue of A^T A above 1e-10 times the largest).
class TallMatrix {
  public:
    TallMatrix(int rows, int cols, std::vector<double> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const std::vector<double>& entries() const { return entries_; }

    /// A^T X A, symmetrized against roundoff.
    SymMatrix congruence(const SymMatrix& x) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> entries_;
};

struct EigDecomp {
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // column j of Q stored at [i*dim + j]
    int dim = 0;
};

/// Cyclic Jacobi eigendecomposition; converges when the off-diagonal
/// Frobenius mass drops below 1e-12 ||X||_F, errors after 100 sweeps.
/// dim <= 64.
EigDecomp jacobi_decompose(const SymMatrix& x);

std::vector<double> jacobi_eigenvalues(const SymMatrix& x);

/// Q Lambda^p Q^T; requires X positive definite.
SymMatrix matrix_power(const SymMatrix& x, double p);

/// e_k of the p-th powers of the eigenvalues of X (X positive definite).
/// Evaluated with the shared elem_sym kernel, so a diagonal X reproduces
/// elem_sym of its (sorted) diagonal exactly.
double ek_spectral(const SymMatrix& x, int k, double p);

/// Midpoint log-convexity of X -> e_k(lambda((A^T X A)^p)), p in [-1, 0):
/// lhs = log e_k at the midpoint, rhs = the average of the endpoint logs,
/// margin = rhs - lhs. p = -1 is the Muir case, p in (-1,0) the Mariet case.
InequalityReport check_muir_logconvex(const TallMatrix& a, const SymMatrix& x,
                                      const SymMatrix& y, int k, double p,
                                      double tol);

/// Midpoint concavity of X -> 1/e_k(lambda(X^p)), p in (-1, 0):
/// margin = f((X+Y)/2) - f(X)/2 - f(Y)/2.
InequalityReport check_ekmtx_recip_concave(const SymMatrix& x, const SymMatrix& y,
                                           int k, double p, double tol);

/// Q diag(lambda) Q^T with lambda log-uniform over [lo, hi] and Q a product
/// of dim^2 random Givens rotations. Deterministic in (dim, seed).
SymMatrix random_spd(int dim, std::uint64_t seed, double lo, double hi);
SymMatrix random_spd(RngStream& stream, int dim, double lo, double hi);

/// Entries uniform in [-1, 1]; resampled (deterministically) in the
/// vanishingly unlikely event of column-rank deficiency.
TallMatrix random_tall(RngStream& stream, int rows, int cols);

/// One matrix verification run (checks: "muir", "mariet", "ekmtx").
struct MatrixSuiteConfig {
    std::string check = "muir";
    std::vector<int> dims = {2, 3, 4, 6};
    int k_fixed = 0;  // 0 -> random valid k per trial
    std::vector<double> p_grid;  // empty -> per-check default
    int trials = 1000;
    std::uint64_t seed = 42;
    double tolerance = 1e-8;
    double spectrum_lo = 1e-1;
    double spectrum_hi = 1e1;
};

std::vector<double> matrix_default_p_grid(const std::string& check);
bool matrix_p_valid(const std::string& check, double p);

SuiteSummary run_matrix_suite(const MatrixSuiteConfig& config);

/// Re-evaluates a recorded matrix trial bit-exactly.
InequalityReport replay_matrix(const std::string& check, const TrialInputs& inputs,
                               double tol);

}  // namespace symineq
