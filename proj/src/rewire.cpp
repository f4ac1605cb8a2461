#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rhomax/digraph.hpp"
#include "rhomax/spectral.hpp"

namespace rhomax {

namespace {

// Relabel so that vertex 0 carries the largest right Perron entry, ties broken
// by current index (stable).
Digraph perron_sorted(const Digraph& d, const PerronOptions& opt) {
    SpectralResult sr = spectral_radius(d, opt);
    std::vector<int> order(d.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sr.right[a] > sr.right[b]; });
    std::vector<int> perm(d.order());
    for (int pos = 0; pos < d.order(); ++pos) perm[order[pos]] = pos;
    return d.relabeled(perm);
}

// Lexicographically smallest arc (i, j) that leaves a free earlier target
// l < j, l != i; returns {i, j, l} with the smallest such l, or l = -1.
std::array<int, 3> first_prefix_violation(const Digraph& d) {
    for (int i = 0; i < d.order(); ++i) {
        for (int j : d.out_neighbors(i)) {
            for (int l = 0; l < j; ++l) {
                if (l == i) continue;
                if (!d.arc(i, l)) return {i, j, l};
            }
        }
    }
    return {-1, -1, -1};
}

std::array<int, 2> first_nesting_violation(const Digraph& d) {
    for (int i = 0; i < d.order(); ++i)
        for (int j = i + 1; j < d.order(); ++j)
            for (int l : d.out_neighbors(j))
                if (l != i && !d.arc(i, l)) return {i, j};
    return {-1, -1};
}

}  // namespace

Digraph rewire_to_dss(const Digraph& d, double tol) {
    if (d.order() == 0) throw std::invalid_argument("empty digraph");
    if (!is_strongly_connected(d)) throw std::invalid_argument("digraph is not strongly connected");
    if (is_member_dss(d).member) return d;

    PerronOptions opt{tol, 1'000'000};
    double rho_in = spectral_radius(d, opt).rho;
    double rho_prev = rho_in;

    Digraph cur = perron_sorted(d, opt);
    long long rounds_cap = std::max<long long>(d.arc_count() * d.order(), 16);

    for (long long round = 0; round < rounds_cap; ++round) {
        auto [i, j, l] = first_prefix_violation(cur);
        if (l >= 0) {
            // moving the arc toward a larger Perron entry cannot decrease rho:
            // A'u >= rho u pointwise, so rho(A') >= rho by Collatz-Wielandt
            cur.remove_arc(i, j);
            cur.add_arc(i, l);
            cur = perron_sorted(cur, opt);
            double rho_now = spectral_radius(cur, opt).rho;
            if (rho_now < rho_prev - 2.0 * tol)
                throw std::runtime_error("normalization stalled: spectral radius decreased");
            rho_prev = rho_now;
            continue;
        }
        auto [a, b] = first_nesting_violation(cur);
        if (a >= 0) {
            // label swap; spectrally neutral
            std::vector<int> perm(cur.order());
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[a], perm[b]);
            cur = cur.relabeled(perm);
            continue;
        }
        DssCheck check = is_member_dss(cur);
        if (!check.member)
            throw std::runtime_error("normalization stalled: left D** (t = 1 inputs may have no D** form)");
        if (rho_prev < rho_in - 2.0 * tol)
            throw std::runtime_error("normalization stalled: spectral radius decreased");
        return cur;
    }
    throw std::runtime_error("normalization stalled");
}

}  // namespace rhomax
