#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhomax/digraph.hpp"
#include "rhomax/spectral.hpp"

namespace rhomax {

/// The unique writing e = k(k-1) + t with 0 <= t <= 2k-1. The intervals
/// [k^2-k, k^2+k-1] partition the positive integers, so k is pinned.
struct ArcDecomposition {
    long long e = 0;
    int k = 0;
    int t = 0;

    bool operator==(const ArcDecomposition&) const = default;
};

ArcDecomposition decompose_arcs(long long e);

/// Shape of the conjectured extremal digraph D#: K<->_k plus one extra vertex
/// v with p = floor(t/2) arcs v -> clique and q = ceil(t/2) arcs clique -> v
/// (the odd single arc goes into v, so the last column of A21 stays zero).
struct DsharpSpec {
    long long e = 0;
    int k = 0;
    int t = 0;
    int p = 0;
    int q = 0;
    int order = 0;  // k when t = 0 (no extra vertex), else k+1
};

DsharpSpec dsharp_spec(long long e);

/// Construct D#. Requires e >= 2. For t = 1 the result is K<->_k plus one arc
/// into the extra vertex; it is not strongly connected and hence not in D**.
Digraph build_dsharp(long long e);

/// rho(D#): k-1 exactly for t = 0, otherwise the largest cubic root,
/// cross-checked against power iteration on build_dsharp(e) within 1e-9.
double rho_dsharp(long long e, const PerronOptions& opt = {});

/// One of the four closed-form cases (t in {0, 1, 2k-2, 2k-1}), with the
/// extremal families attaining it. case_id is 1..4.
struct ClosedForm {
    int case_id = 0;
    double rho = 0.0;
    std::vector<std::string> families;
};

std::optional<ClosedForm> rho_closed_form(long long e);

/// The characterized extremal digraphs for a closed-form case, as concrete
/// labeled digraphs (two variants only for k = 2, t = 1).
std::vector<Digraph> closed_form_extremals(int k, int t);

}  // namespace rhomax
