#pragma once

#include <vector>

#include "rhomax/digraph.hpp"

namespace rhomax {

/// Minimal dense row-major matrix. The spectral machinery is certified power
/// iteration on small nonnegative matrices, so no external linear algebra is
/// pulled in.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0);

    static Matrix identity(int n);
    /// J_k - I_k, the adjacency of K<->_k.
    static Matrix clique(int k);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transpose() const;
    double max_entry() const;
    double trace() const;
    double sum() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

Matrix adjacency_matrix(const Digraph& d);

struct PerronOptions {
    double tol = 1e-12;
    long max_iter = 1'000'000;
};

/// Perron data of an adjacency matrix. right/left are sum-normalized to 1 and
/// strictly positive when the digraph is strongly connected; for reducible
/// inputs they live on the dominant diagonal block (zeros elsewhere) and
/// `reducible` is set. residual is the max-norm of A*right - rho*right,
/// evaluated on the dominant block.
struct SpectralResult {
    double rho = 0.0;
    std::vector<double> right;
    std::vector<double> left;
    double residual = 0.0;
    long iterations = 0;
    bool reducible = false;
};

SpectralResult spectral_radius(const Digraph& d, const PerronOptions& opt = {});
double spectral_radius_value(const Digraph& d, const PerronOptions& opt = {});

/// Spectral radius of an arbitrary square nonnegative matrix (max over the
/// irreducible diagonal blocks of its support pattern).
double perron_value(const Matrix& m, const PerronOptions& opt = {});

/// Spectral norm nu(M) = sqrt(rho(M M^T)), the largest singular value.
/// Empty or all-zero matrices give 0.
double spectral_norm(const Matrix& m, const PerronOptions& opt = {});

/// The series g(r) = sum_i mu_i / (r^i (r+1)^(i+1)) with mu_i = 1^T (A12 A21)^i 1,
/// whose unique positive root is the spectral radius of
/// [[J_k - I_k, A12], [A21, 0]]. Moments grow on demand; evaluation truncates
/// once the geometric tail bound (ratio nu(A12 A21) / (r (r+1))) pushes the
/// remainder below the requested tolerance.
class SeriesEquation {
public:
    SeriesEquation(int k, const Matrix& a12, const Matrix& a21, const PerronOptions& opt = {});

    int clique_size() const { return k_; }
    double tail_bound() const { return nu_; }
    const std::vector<double>& moments() const { return mu_; }
    int max_depth_used() const { return max_depth_; }

    /// g(r) with certified truncation error below tail_tol. Requires
    /// r (r+1) > tail_bound.
    double evaluate(double r, double tail_tol);

private:
    int k_ = 0;
    Matrix c_;
    double nu_ = 0.0;
    std::vector<double> mu_;
    std::vector<double> power_;  // C^i applied to the ones vector
    int max_depth_ = 0;

    void extend();
};

/// Solve g(r) = 1 by bisection: the spectral radius of the assembled block
/// matrix [[J_k - I_k, A12], [A21, 0]], which must be irreducible.
double frc_solve(int k, const Matrix& a12, const Matrix& a21, double tol = 1e-12,
                 const PerronOptions& opt = {});

/// Largest real root of
///   x^3 - (k-2) x^2 - (k + floor(t/2) - 1) x + floor(t/2) (k - ceil(t/2) - 1) = 0,
/// the spectral radius of D# for e = k(k-1)+t. Bisection on [max(0,k-2), k]
/// to 1e-13, then two Newton polish steps.
double dsharp_cubic_root(int k, int t);

}  // namespace rhomax
