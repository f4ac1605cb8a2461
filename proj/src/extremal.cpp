#include "rhomax/extremal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rhomax {

ArcDecomposition decompose_arcs(long long e) {
    if (e < 1) throw std::invalid_argument("arc count must be positive");
    long long k = static_cast<long long>((1.0 + std::sqrt(1.0 + 4.0 * static_cast<double>(e))) / 2.0);
    while (k * (k - 1) > e) --k;
    while ((k + 1) * k <= e) ++k;
    return {e, static_cast<int>(k), static_cast<int>(e - k * (k - 1))};
}

DsharpSpec dsharp_spec(long long e) {
    if (e < 2) throw std::invalid_argument("D# requires e >= 2");
    auto [_, k, t] = decompose_arcs(e);
    DsharpSpec s;
    s.e = e;
    s.k = k;
    s.t = t;
    s.p = t / 2;
    s.q = (t + 1) / 2;
    s.order = t == 0 ? k : k + 1;
    return s;
}

Digraph build_dsharp(long long e) {
    DsharpSpec s = dsharp_spec(e);
    if (s.t == 0) return Digraph::complete(s.k);
    Digraph d = Digraph::complete(s.k);
    Digraph out(s.k + 1);
    for (auto [i, j] : d.arcs()) out.add_arc(i, j);
    int v = s.k;
    for (int i = 0; i < s.p; ++i) out.add_arc(v, i);  // v -> clique
    for (int i = 0; i < s.q; ++i) out.add_arc(i, v);  // clique -> v
    return out;
}

double rho_dsharp(long long e, const PerronOptions& opt) {
    DsharpSpec s = dsharp_spec(e);
    double rho = s.t == 0 ? static_cast<double>(s.k - 1) : dsharp_cubic_root(s.k, s.t);
    double check = spectral_radius_value(build_dsharp(e), opt);
    if (std::abs(rho - check) > 1e-9) {
        std::ostringstream msg;
        msg << "cubic root " << rho << " disagrees with power iteration " << check
            << " for e = " << e;
        throw std::runtime_error(msg.str());
    }
    return rho;
}

std::optional<ClosedForm> rho_closed_form(long long e) {
    if (e < 1) throw std::invalid_argument("arc count must be positive");
    auto [_, k, t] = decompose_arcs(e);
    ClosedForm c;
    if (t == 0) {
        c.case_id = 1;
        c.rho = k - 1.0;
        c.families = {"complete simple digraph on k vertices"};
    } else if (t == 1) {
        c.case_id = 2;
        c.rho = k - 1.0;
        c.families = {"complete simple digraph on k vertices plus one arc"};
        if (k == 2) c.families.push_back("oriented triangle");
    } else if (t == 2 * k - 2) {
        c.case_id = 3;
        c.rho = (k - 2.0 + std::sqrt((k - 2.0) * (k - 2.0) + 8.0 * (k - 1.0))) / 2.0;
        c.families = {"complete simple digraph on k+1 vertices minus a bidirected pair"};
    } else if (t == 2 * k - 1) {
        c.case_id = 4;
        c.rho = (k - 1.0 + std::sqrt((k - 1.0) * (k - 1.0) + 4.0 * (k - 1.0))) / 2.0;
        c.families = {"complete simple digraph on k+1 vertices minus one arc"};
    } else {
        return std::nullopt;
    }
    return c;
}

std::vector<Digraph> closed_form_extremals(int k, int t) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    std::vector<Digraph> out;
    if (t == 0) {
        out.push_back(Digraph::complete(k));
    } else if (t == 1) {
        Digraph d(k + 1);
        for (auto [i, j] : Digraph::complete(k).arcs()) d.add_arc(i, j);
        d.add_arc(0, k);
        out.push_back(d);
        if (k == 2)
            out.push_back(Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}));
    } else if (t == 2 * k - 2) {
        Digraph d = Digraph::complete(k + 1);
        d.remove_arc(k - 1, k);
        d.remove_arc(k, k - 1);
        out.push_back(d);
    } else if (t == 2 * k - 1) {
        Digraph d = Digraph::complete(k + 1);
        d.remove_arc(k, k - 1);
        out.push_back(d);
    } else {
        throw std::invalid_argument("t has no closed-form case");
    }
    return out;
}

}  // namespace rhomax
