#include "rhomax/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "rhomax/extremal.hpp"

namespace rhomax {

namespace {

long long ones(const Matrix& m) {
    long long c = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0.0) ++c;
    return c;
}

}  // namespace

double lu_bound(int w, long long e) {
    if (w < 1) throw std::invalid_argument("clique number must be positive");
    if (e < static_cast<long long>(w) * (w - 1))
        throw std::invalid_argument("arc count below w(w-1)");
    double ww = w - 1.0;
    return (ww + std::sqrt(ww * ww + 2.0 * (e - static_cast<double>(w) * (w - 1)))) / 2.0;
}

double lu_bound_karcs(long long e) {
    return lu_bound(decompose_arcs(e).k, e);
}

double fr1_bound(const Matrix& a12, const Matrix& a21, int w, const PerronOptions& opt) {
    double nu = spectral_norm(a12 * a21, opt);
    double ww = w - 1.0;
    return (ww + std::sqrt(ww * ww + 4.0 * nu)) / 2.0;
}

double lm_row_lhs(const Matrix& a12, const Matrix& a21) {
    double s = 0.0;
    for (int j = 0; j < a12.cols(); ++j) {
        double col = 0.0;
        for (int i = 0; i < a12.rows(); ++i) col += a12(i, j);
        s += col * col;
    }
    for (int i = 0; i < a21.rows(); ++i) {
        double row = 0.0;
        for (int j = 0; j < a21.cols(); ++j) row += a21(i, j);
        s += row * row;
    }
    return s;
}

double lm_row_bound(const Matrix& a12, const Matrix& a21, int w) {
    if (w < 1) throw std::invalid_argument("clique number must be positive");
    long long total = ones(a12) + ones(a21);
    long long p = total / w;
    double rem = static_cast<double>(total - p * w);
    return static_cast<double>(p) * w * w + rem * rem;
}

double lm_product_lhs(const Matrix& a12, const Matrix& a21) {
    return (a12 * a21).sum();
}

double lm_product_bound(const Matrix& a12, const Matrix& a21, int w) {
    if (w < 1) throw std::invalid_argument("clique number must be positive");
    long long total = ones(a12) + ones(a21);
    long long pprime = total / (2 * w - 1);
    long long t3 = total - pprime * (2 * w - 1);
    return static_cast<double>(pprime) * w * (w - 1) +
           static_cast<double>(t3 / 2) * static_cast<double>((t3 + 1) / 2);
}

double coarse_bound(long long e) {
    auto [_, k, t] = decompose_arcs(e);
    if (k < 2) throw std::invalid_argument("coarse bound requires k >= 2");
    return k - 1.0 + t / (2.0 * (k - 1.0));
}

double inequality3_bound(long long k, long long t, long long s) {
    if (k < 2 || s < 1 || t < 2)
        throw std::invalid_argument("inequality (3.3) requires k >= 2, s >= 1, t >= 2");
    double kk = static_cast<double>(k);
    double tt = static_cast<double>(t);
    double ss = static_cast<double>(s);
    double kmk = kk * kk - kk;
    double load = ss * (kk - ss) + tt + std::sqrt(tt) / 2.0;
    double denom = kmk - load;
    if (denom <= 0.0) throw std::invalid_argument("bracket condition violated");
    double second = (ss * (kk - ss) * (kk - ss - 1.0) + (tt + 1.0) * (tt + 1.0)) / kmk;
    double third = (ss * (kk - ss) * (kk - ss) + 3.0 * tt * tt) * load / (kmk * denom);
    return kk - ss + second + third - 1.0;
}

double row_product_intermediate(long long k, int w, long long t) {
    double kw = static_cast<double>(k - w);
    double mid = kw * (kw - 1.0) + static_cast<double>(t);
    return kw * static_cast<double>(w) * w + mid * mid / 2.0;
}

std::optional<BlockForm> block_form(const Digraph& d) {
    int w = clique_number(d);
    int n = d.order();
    if (w < 1 || w > n) return std::nullopt;
    // first w vertices must induce K<->_w
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j)
            if (i != j && !d.arc(i, j)) return std::nullopt;
    // no arcs among the rest
    for (int i = w; i < n; ++i)
        for (int j = w; j < n; ++j)
            if (i != j && d.arc(i, j)) return std::nullopt;
    BlockForm b;
    b.w = w;
    b.a12 = Matrix(w, n - w);
    b.a21 = Matrix(n - w, w);
    for (int i = 0; i < w; ++i)
        for (int j = w; j < n; ++j)
            if (d.arc(i, j)) b.a12(i, j - w) = 1.0;
    for (int i = w; i < n; ++i)
        for (int j = 0; j < w; ++j)
            if (d.arc(i, j)) b.a21(i - w, j) = 1.0;
    return b;
}

BoundTrace bound_trace(const Digraph& d, const PerronOptions& opt) {
    if (d.order() == 0) throw std::invalid_argument("empty digraph");
    BoundTrace tr;
    tr.e = d.arc_count();
    tr.n = d.order();
    tr.w = clique_number(d);
    auto dec = decompose_arcs(tr.e);
    tr.k = dec.k;
    tr.t = dec.t;
    tr.rho = spectral_radius(d, opt).rho;
    tr.dss_member = is_member_dss(d).member;

    auto add = [&](const std::string& name, double value) {
        tr.entries.push_back({name, value, value - tr.rho});
    };

    if (tr.e >= static_cast<long long>(tr.w) * (tr.w - 1))
        add("lemma3.1_clique", lu_bound(tr.w, tr.e));
    add("lemma3.1_karcs", lu_bound_karcs(tr.e));
    if (tr.k >= 2) add("corollary4.4", coarse_bound(tr.e));

    if (tr.dss_member) {
        if (auto blocks = block_form(d)) {
            add("theorem2.1", fr1_bound(blocks->a12, blocks->a21, blocks->w, opt));
            double row_lhs = lm_row_lhs(blocks->a12, blocks->a21);
            double row_rhs = lm_row_bound(blocks->a12, blocks->a21, blocks->w);
            tr.entries.push_back({"lemma3.3_row_lhs", row_lhs, row_rhs - row_lhs});
            tr.entries.push_back({"lemma3.3_row_rhs", row_rhs, row_rhs - row_lhs});
            double prod_lhs = lm_product_lhs(blocks->a12, blocks->a21);
            double prod_rhs = lm_product_bound(blocks->a12, blocks->a21, blocks->w);
            tr.entries.push_back({"lemma3.3_product_lhs", prod_lhs, prod_rhs - prod_lhs});
            tr.entries.push_back({"lemma3.3_product_rhs", prod_rhs, prod_rhs - prod_lhs});
            // the (3.2) intermediate, so the 3t^2 simplification can be audited
            tr.entries.push_back({"inequality3.2_intermediate",
                                  row_product_intermediate(tr.k, blocks->w, tr.t), 0.0});
        }
    }
    int s = tr.k - tr.w;
    if (s >= 1 && tr.t >= 2) {
        double kmk = static_cast<double>(tr.k) * tr.k - tr.k;
        double load = static_cast<double>(s) * (tr.k - s) + tr.t + std::sqrt(static_cast<double>(tr.t)) / 2.0;
        if (kmk - load > 0.0) add("inequality3.3", inequality3_bound(tr.k, tr.t, s));
    }
    return tr;
}

}  // namespace rhomax
