#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rhomax/digraph.hpp"
#include "rhomax/extremal.hpp"
#include "rhomax/spectral.hpp"

namespace rhomax {

struct SweepOptions {
    PerronOptions perron;
    double tie_tol = 1e-9;
    int jobs = 1;
    /// Sweeps with e > 40 are refused unless set (they can run for hours).
    bool long_running = false;
};

/// Enumerate the canonical members of D**(e): every normalized prefix vector
/// on n = n_min(e) .. n_max(e) vertices whose expansion is strongly connected
/// and nested. n_max is capped at k + ceil(t/2) + 2 (digraphs with more
/// low-degree vertices cannot be optimal; the cap is cross-checked against
/// the uncapped brute-force oracle for small e). Deterministic lexicographic
/// order on (n, m).
void enumerate_dss(long long e, const std::function<void(const CanonicalForm&, const Digraph&)>& sink);
std::vector<CanonicalForm> enumerate_dss(long long e);

int dss_vertex_cap(long long e);

/// Exhaustive oracle over ALL simple digraphs with n vertices and e arcs
/// (including non-strongly-connected ones). Refuses when C(n(n-1), e) exceeds
/// the 1e7 guard. argmax digraphs are arc-set distinct, within tie_tol of the
/// maximum.
struct BruteResult {
    double rho_max = 0.0;
    std::vector<Digraph> argmax;
    long long searched = 0;
};

BruteResult brute_max_rho(long long e, int n, const SweepOptions& opt = {});

/// Per-e verification record for the conjecture sweep.
struct VerificationReport {
    long long e = 0;
    int k = 0;
    int t = 0;
    long long n_candidates = 0;
    double rho_max = 0.0;
    std::vector<CanonicalForm> argmax;
    double dsharp_rho = 0.0;
    bool dsharp_in_dss = false;  // t != 1
    bool conjecture_holds = false;
    std::string case_label;
    double elapsed_ms = 0.0;
};

/// Sweep D**(e), track the maximum and its argmax set (ties within tie_tol),
/// and compare against D#. conjecture_holds means the argmax is unique and
/// equals build_dsharp(e) as an arc set. The conjecture range proper is
/// 1 < t < 2k-2; boundary t values are labeled with their closed-form case.
VerificationReport verify_conjecture(long long e, const SweepOptions& opt = {});

/// One closed-form case check: power iteration on the characterized extremal
/// digraph(s) against the closed form, plus a D** sweep when e <= sweep_arc_cap
/// (the sweep must reproduce the closed form for t != 1 and stay strictly
/// below it for t = 1).
struct Theorem16Row {
    int k = 0;
    int t = 0;
    long long e = 0;
    int case_id = 0;
    double closed_form = 0.0;
    double extremal_rho = 0.0;
    bool extremal_ok = false;
    bool sweep_ran = false;
    double sweep_max = 0.0;
    bool sweep_ok = false;
    bool pass = false;
};

std::vector<Theorem16Row> verify_theorem16(int k_max, const SweepOptions& opt = {},
                                           long long sweep_arc_cap = 18);

/// Theorem 1.5 check. Inside the hypothesis k > 4t^4 + 4 enumeration is not
/// desk-feasible (e >= 4694), so the bound chain
/// inequality3_bound(k, t, s) < k-1 < rho(D#) is verified for every
/// 1 <= s <= ceil(sqrt(t)); outside the hypothesis the conjecture sweep runs
/// and reports whether D# wins.
struct Theorem15Record {
    long long e = 0;
    int k = 0;
    int t = 0;
    std::string mode;  // "bound-chain" or "enumeration"
    bool pass = false;
    double dsharp_rho = 0.0;
    std::vector<double> bound_values;  // bound-chain mode, indexed by s-1
    VerificationReport sweep;          // enumeration mode
};

Theorem15Record verify_theorem15(long long e, const SweepOptions& opt = {});

}  // namespace rhomax
