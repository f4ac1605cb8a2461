#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhomax/digraph.hpp"
#include "rhomax/spectral.hpp"

namespace rhomax {

/// rho(D) <= (w-1 + sqrt((w-1)^2 + 2(e - w(w-1)))) / 2 for D in D**(e) with
/// clique number w. Requires w(w-1) <= e.
double lu_bound(int w, long long e);

/// The k-form of the same bound, (k-1 + sqrt((k-1)^2 + 2t)) / 2.
double lu_bound_karcs(long long e);

/// rho([[J_w - I_w, A12], [A21, 0]]) <= (w-1 + sqrt((w-1)^2 + 4 nu(A12 A21))) / 2.
double fr1_bound(const Matrix& a12, const Matrix& a21, int w, const PerronOptions& opt = {});

/// Majorization bound on the block row/column sums:
///   ||A12^T 1||^2 + ||A21 1||^2 <= p w^2 + (E - p w)^2,  p = floor(E / w),
/// where E = |E(A12)| + |E(A21)|. lm_row_lhs is the left-hand side.
double lm_row_bound(const Matrix& a12, const Matrix& a21, int w);
double lm_row_lhs(const Matrix& a12, const Matrix& a21);

/// Majorization bound on the product sum:
///   1^T (A12 A21) 1 <= p' w(w-1) + floor(t3/2) ceil(t3/2),
/// p' = floor(E / (2w-1)), t3 = E - p'(2w-1). Requires the D** block
/// hypothesis; dense off-blocks violate it. lm_product_lhs is the LHS.
double lm_product_bound(const Matrix& a12, const Matrix& a21, int w);
double lm_product_lhs(const Matrix& a12, const Matrix& a21);

/// Coarse bound rho(D) <= k - 1 + t / (2(k-1)) for any D with e arcs. k >= 2.
double coarse_bound(long long e);

/// The long-form upper bound from the k > 4t^4 + 4 regime, for clique number
/// w = k - s:
///   rho <= k - s + [s(k-s)(k-s-1) + (t+1)^2] / (k^2-k)
///        + [(s(k-s)^2 + 3t^2)(s(k-s) + t + sqrt(t)/2)]
///          / [(k^2-k)(k^2-k - (s(k-s) + t + sqrt(t)/2))] - 1.
/// Requires k >= 2, s >= 1, t >= 2 and a positive denominator ("bracket
/// condition violated" otherwise).
double inequality3_bound(long long k, long long t, long long s);

/// Intermediate value (k-w) w^2 + ((k-w)(k-w-1) + t)^2 / 2 whose simplification
/// to (k-w) w^2 + 3 t^2 needs k > 4t^4 + 4; exposed so the step can be audited.
double row_product_intermediate(long long k, int w, long long t);

/// Block decomposition A = [[J_w - I_w, A12], [A21, 0]] of a D**-arranged
/// digraph with clique number w (first w vertices complete, no arcs among the
/// rest). Fails when the digraph is not in this shape.
struct BlockForm {
    int w = 0;
    Matrix a12;
    Matrix a21;
};

std::optional<BlockForm> block_form(const Digraph& d);

/// Every applicable upper bound evaluated against the computed rho.
/// slack = bound - rho; audits flag entries with slack < -1e-9.
struct BoundTrace {
    struct Entry {
        std::string name;
        double value = 0.0;
        double slack = 0.0;
    };

    long long e = 0;
    int n = 0;
    int w = 0;
    int k = 0;
    int t = 0;
    double rho = 0.0;
    bool dss_member = false;
    std::vector<Entry> entries;
};

BoundTrace bound_trace(const Digraph& d, const PerronOptions& opt = {});

}  // namespace rhomax
