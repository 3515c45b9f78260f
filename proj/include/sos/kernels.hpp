#pragma once

#include <span>
#include <vector>

#include "sos/polynomial.hpp"

namespace sos::kernels {

/// Execution strategy for the numeric kernels. The parallel variants only
/// distribute independent entry computations and never reorder reductions,
/// so each is bitwise deterministic regardless of thread count. Across the
/// two strategies, eval_batch matches bitwise; the eigensolvers visit
/// rotations in different orders and agree only to tolerance.
enum class Exec { serial, parallel };

/// Dense square matrix of doubles, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), data_(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0) {}
    static Matrix identity(int n);

    int size() const { return n_; }
    double& at(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }
    const double& at(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }
    std::vector<double>& storage() { return data_; }
    const std::vector<double>& storage() const { return data_; }

    double frobenius() const;
    double max_abs() const;
    double off_diagonal_norm() const;
    void symmetrize();

private:
    int n_ = 0;
    std::vector<double> data_;
};

bool is_symmetric(const Matrix& a, double tol = 1e-12);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column j pairs with values[j]; A = V diag V^T
};

/// Jacobi eigendecomposition of a symmetric matrix. The serial strategy is
/// the classic cyclic sweep; the parallel strategy applies disjoint-pair
/// rotation rounds (round-robin tournament order) whose per-entry arithmetic
/// is independent of the thread count. Throws on non-symmetric input.
EigenDecomposition symmetric_eigen(const Matrix& a, Exec exec = Exec::parallel);

/// Nearest positive semidefinite matrix in Frobenius norm: eigendecompose
/// and clamp negative eigenvalues to zero.
Matrix psd_project(const Matrix& a, Exec exec = Exec::parallel);

/// Evaluate f at many points. coords holds npoints * nvars doubles,
/// row-major, one point per row. Returns npoints values.
std::vector<double> eval_batch(const Polynomial& f, std::span<const double> coords,
                               Exec exec = Exec::parallel);

}  // namespace sos::kernels
