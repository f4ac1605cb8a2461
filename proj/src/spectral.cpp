#include "rhomax/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rhomax {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::clique(int k) {
    Matrix m(k, k, 1.0);
    for (int i = 0; i < k; ++i) m(i, i) = 0.0;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::max_entry() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, x);
    return m;
}

double Matrix::trace() const {
    double s = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
}

double Matrix::sum() const { return std::accumulate(a_.begin(), a_.end(), 0.0); }

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](double x) { return x == 0.0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix adjacency_matrix(const Digraph& d) {
    Matrix m(d.order(), d.order());
    for (auto [i, j] : d.arcs()) m(i, j) = 1.0;
    return m;
}

namespace {

std::vector<double> matvec(const Matrix& m, const std::vector<double>& x) {
    std::vector<double> y(m.rows(), 0.0);
    for (int i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

void normalize_sum(std::vector<double>& x) {
    double s = std::accumulate(x.begin(), x.end(), 0.0);
    if (s > 0.0)
        for (double& v : x) v /= s;
}

struct PowerOutcome {
    double rho = 0.0;
    std::vector<double> vec;
    long iterations = 0;
};

// Certified power iteration on an irreducible nonnegative matrix. Works on
// the shifted matrix B' = B + I (primitive, so the iteration cannot cycle)
// and stops when the Collatz-Wielandt enclosure
//     min_i (B'u)_i/u_i  <=  rho(B') <=  max_i (B'u)_i/u_i
// is tighter than tol. Since u is kept strictly positive the enclosure is
// rigorous at every step. Convergence is accelerated by repeatedly squaring
// a normalized copy of B' (each squaring doubles the effective power of the
// iterate); the certificate is always evaluated with the original B'.
PowerOutcome power_irreducible(const Matrix& b, const PerronOptions& opt) {
    int n = b.rows();
    if (n == 0) throw std::invalid_argument("empty matrix block");
    if (n == 1) return {b(0, 0), {1.0}, 0};

    Matrix shifted = b;
    for (int i = 0; i < n; ++i) shifted(i, i) += 1.0;

    Matrix stepper = shifted;
    int squarings = 0;

    std::vector<double> u(n, 1.0 / n);
    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    for (long iter = 1; iter <= opt.max_iter; ++iter) {
        u = matvec(stepper, u);
        normalize_sum(u);

        std::vector<double> y = matvec(shifted, u);
        lo = std::numeric_limits<double>::infinity();
        hi = 0.0;
        for (int i = 0; i < n; ++i) {
            double r = y[i] / u[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        if (hi - lo <= opt.tol) return {(lo + hi) / 2.0 - 1.0, std::move(u), iter};

        if (iter % 16 == 0 && squarings < 40) {
            stepper = stepper * stepper;
            double m = stepper.max_entry();
            if (m > 0.0) {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) stepper(i, j) /= m;
            }
            ++squarings;
        }
    }
    std::ostringstream msg;
    msg << "power iteration did not converge after " << opt.max_iter
        << " iterations (best enclosure [" << lo - 1.0 << ", " << hi - 1.0 << "])";
    throw std::runtime_error(msg.str());
}

Matrix submatrix(const Matrix& m, const std::vector<int>& idx) {
    Matrix s(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = m(idx[i], idx[j]);
    return s;
}

std::vector<std::vector<int>> support_sccs(const Matrix& m) {
    int n = m.rows();
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && m(i, j) > 0.0) adj[i].push_back(j);
    return strongly_connected_components(n, adj);
}

}  // namespace

double perron_value(const Matrix& m, const PerronOptions& opt) {
    if (m.rows() != m.cols()) throw std::invalid_argument("perron_value needs a square matrix");
    if (m.rows() == 0) return 0.0;
    double best = 0.0;
    for (const auto& scc : support_sccs(m)) {
        if (scc.size() == 1) {
            best = std::max(best, m(scc[0], scc[0]));
            continue;
        }
        best = std::max(best, power_irreducible(submatrix(m, scc), opt).rho);
    }
    return best;
}

SpectralResult spectral_radius(const Digraph& d, const PerronOptions& opt) {
    int n = d.order();
    if (n == 0) throw std::invalid_argument("spectral radius of the empty digraph");

    Matrix a = adjacency_matrix(d);
    auto sccs = strongly_connected_components(d);

    SpectralResult res;
    res.reducible = sccs.size() > 1;
    res.right.assign(n, 0.0);
    res.left.assign(n, 0.0);

    // dominant block: the SCC with the largest rho (first wins ties)
    int best_idx = -1;
    PowerOutcome best_right;
    for (std::size_t s = 0; s < sccs.size(); ++s) {
        const auto& scc = sccs[s];
        PowerOutcome out = scc.size() == 1 ? PowerOutcome{0.0, {1.0}, 0}
                                           : power_irreducible(submatrix(a, scc), opt);
        res.iterations += out.iterations;
        if (best_idx < 0 || out.rho > best_right.rho) {
            best_idx = static_cast<int>(s);
            best_right = std::move(out);
        }
    }

    const auto& dom = sccs[best_idx];
    res.rho = best_right.rho;
    for (std::size_t i = 0; i < dom.size(); ++i) res.right[dom[i]] = best_right.vec[i];

    Matrix block = submatrix(a, dom);
    PowerOutcome left = dom.size() == 1 ? PowerOutcome{0.0, {1.0}, 0}
                                        : power_irreducible(block.transpose(), opt);
    res.iterations += left.iterations;
    for (std::size_t i = 0; i < dom.size(); ++i) res.left[dom[i]] = left.vec[i];

    // residual on the dominant block
    std::vector<double> ublock(best_right.vec);
    std::vector<double> y = matvec(block, ublock);
    double r = 0.0;
    for (std::size_t i = 0; i < ublock.size(); ++i)
        r = std::max(r, std::abs(y[i] - res.rho * ublock[i]));
    res.residual = r;
    return res;
}

double spectral_radius_value(const Digraph& d, const PerronOptions& opt) {
    return spectral_radius(d, opt).rho;
}

double spectral_norm(const Matrix& m, const PerronOptions& opt) {
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return 0.0;
    return std::sqrt(perron_value(m * m.transpose(), opt));
}

SeriesEquation::SeriesEquation(int k, const Matrix& a12, const Matrix& a21,
                               const PerronOptions& opt)
    : k_(k) {
    if (k < 1) throw std::invalid_argument("clique size must be positive");
    if (a12.rows() != k || a21.cols() != k || a12.cols() != a21.rows())
        throw std::invalid_argument("block shape mismatch");
    c_ = a12 * a21;
    nu_ = spectral_norm(c_, opt);
    mu_ = {static_cast<double>(k)};  // mu_0 = 1^T 1 over the clique block
    power_.assign(static_cast<std::size_t>(k), 1.0);
}

void SeriesEquation::extend() {
    power_ = matvec(c_, power_);
    mu_.push_back(std::accumulate(power_.begin(), power_.end(), 0.0));
}

double SeriesEquation::evaluate(double r, double tail_tol) {
    double rr = r * (r + 1.0);
    if (rr <= nu_)
        throw std::invalid_argument("series diverges: r(r+1) <= nu(A12 A21)");
    double q = nu_ / rr;
    double g = 0.0;
    double coeff = 1.0 / (r + 1.0);  // 1 / (r^i (r+1)^(i+1)) at i = 0
    double qpow = q;  // q^(i+1)
    for (int i = 0;; ++i) {
        if (i >= static_cast<int>(mu_.size())) extend();
        g += mu_[i] * coeff;
        // mu_j <= k nu^j, so the remainder past i is below
        // k q^(i+1) / ((r+1)(1-q))
        double tail = k_ * qpow / ((r + 1.0) * (1.0 - q));
        max_depth_ = std::max(max_depth_, i);
        if (tail < tail_tol) break;
        if (i > 100000)
            throw std::runtime_error("series truncation did not converge (r too close to bracket)");
        coeff /= rr;
        qpow *= q;
    }
    return g;
}

double frc_solve(int k, const Matrix& a12, const Matrix& a21, double tol,
                 const PerronOptions& opt) {
    SeriesEquation series(k, a12, a21, opt);
    double nu = series.tail_bound();
    if (nu == 0.0) return static_cast<double>(k) - 1.0;  // g(r) = k/(r+1)

    double tail_tol = tol / 10.0;
    // left bracket: past both k-1 and the divergence point r(r+1) = nu
    double divergence = (-1.0 + std::sqrt(1.0 + 4.0 * nu)) / 2.0;
    double lo = std::max(static_cast<double>(k) - 1.0, divergence + std::max(tol, 1e-13));
    while (series.evaluate(lo, tail_tol) < 1.0) {
        // can only happen within numerical slack of the root; widen left
        double next = divergence + (lo - divergence) / 2.0;
        if (lo - next < 1e-15) break;
        lo = next;
    }
    double hi = std::max(lo + 1.0, static_cast<double>(k + a12.cols()));
    while (series.evaluate(hi, tail_tol) >= 1.0) {
        hi *= 2.0;
        if (hi > 1e12) throw std::runtime_error("frc_solve bracket failure");
    }
    while (hi - lo > tol / 4.0) {
        double mid = (lo + hi) / 2.0;
        if (series.evaluate(mid, tail_tol) >= 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2.0;
}

double dsharp_cubic_root(int k, int t) {
    if (k < 2) throw std::invalid_argument("cubic requires k >= 2");
    if (t < 0 || t > 2 * k - 1) throw std::invalid_argument("t out of range [0, 2k-1]");
    double p = std::floor(t / 2.0);
    double q = std::ceil(t / 2.0);
    auto f = [&](double x) {
        return ((x - (k - 2.0)) * x - (k + p - 1.0)) * x + p * (k - q - 1.0);
    };
    auto fprime = [&](double x) { return (3.0 * x - 2.0 * (k - 2.0)) * x - (k + p - 1.0); };

    double lo = std::max(0.0, k - 2.0);
    double hi = k;
    // f(lo) <= 0 < f(hi); keep the sign invariant so bisection lands on the
    // largest root even when lo is itself a root (k = 2, t <= 1)
    while (hi - lo > 1e-13) {
        double mid = (lo + hi) / 2.0;
        if (f(mid) <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double x = (lo + hi) / 2.0;
    for (int step = 0; step < 2; ++step) {
        double d = fprime(x);
        if (d == 0.0) break;
        double next = x - f(x) / d;
        if (next >= lo - 1e-12 && next <= hi + 1e-12) x = next;
    }
    return x;
}

}  // namespace rhomax
