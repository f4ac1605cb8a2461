#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rhomax {

/// Simple digraph (no loops, no multiarcs) on vertices 0..n-1.
///
/// Adjacency is stored as per-vertex bit rows: bit j of row i is the arc
/// i -> j. Rows are machine words, so arc iteration and the subset tests used
/// by the D** predicates are word-parallel. Operations treat digraphs as
/// values: they copy, mutate their own copy and return it.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);

    /// Build from an explicit arc list. Rejects loops ("loop forbidden"),
    /// duplicate pairs ("multiarc forbidden") and out-of-range endpoints.
    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    /// Complete simple digraph K<->_k (adjacency J - I).
    static Digraph complete(int k);

    int order() const { return n_; }
    long long arc_count() const { return arcs_; }

    bool arc(int i, int j) const;
    void add_arc(int i, int j);
    void remove_arc(int i, int j);

    int out_degree(int i) const;
    int in_degree(int i) const;

    std::span<const std::uint64_t> row(int i) const;
    std::vector<int> out_neighbors(int i) const;

    /// All arcs in lexicographic (i, j) order.
    std::vector<std::pair<int, int>> arcs() const;

    /// Relabel vertex v as perm[v].
    Digraph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Digraph&) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    long long arcs_ = 0;
    std::vector<std::uint64_t> bits_;

    void check_endpoints(int i, int j) const;
};

/// Strongly connected components in reverse topological order (every class is
/// emitted before any class that can reach it).
std::vector<std::vector<int>> strongly_connected_components(const Digraph& d);

/// Same, for a plain adjacency-list graph.
std::vector<std::vector<int>> strongly_connected_components(
    int n, const std::vector<std::vector<int>>& out_adj);

bool is_strongly_connected(const Digraph& d);

/// Clique number w(D): the largest k with K<->_k as a subgraph. Exact
/// Bron-Kerbosch with pivoting on the graph of bidirected arc pairs.
int clique_number(const Digraph& d);

/// Drop vertices with zero in- and out-degree, preserving relative order of
/// the rest. May return the empty digraph (n = 0).
Digraph remove_isolated(const Digraph& d);

/// Prefix encoding of a D** digraph: vertex i's out-neighborhood is
/// {0..m[i]-1} \ {i}. Normalized so that m[i] != i+1 (that value encodes the
/// same set as m[i] == i), which makes the encoding injective on arc sets.
struct CanonicalForm {
    int n = 0;
    std::vector<int> m;

    bool operator==(const CanonicalForm&) const = default;
};

Digraph expand_canonical(const CanonicalForm& c);

/// Recover the canonical form of a digraph whose out-neighborhoods are all
/// prefixes minus self; fails (returns false via found) otherwise.
bool canonical_form(const Digraph& d, CanonicalForm& out);

/// Result of the D** membership test. On failure, `violation` names the first
/// broken requirement (checked in the order below) and i/j/l are witnesses:
/// prefix: arc (i, j) present but (i, l) missing for some l < j, l != i;
/// nesting: N+(j) \ {i} not a subset of N+(i) \ {j} with l in the difference.
struct DssCheck {
    enum class Violation { none, not_strongly_connected, prefix, nesting };

    bool member = false;
    Violation violation = Violation::none;
    int i = -1, j = -1, l = -1;
};

DssCheck is_member_dss(const Digraph& d);

/// Perron-guided normalization into D**: relabel by descending right Perron
/// vector, then repeatedly move arcs to the smallest free earlier target,
/// which never decreases the spectral radius. Requires a strongly connected
/// input; throws "normalization stalled" if the procedure exits D** (possible
/// when t = 1, e.g. the oriented triangle, since D**(3) is empty).
Digraph rewire_to_dss(const Digraph& d, double tol = 1e-12);

/// Textual digraph format: first line "n e", then e lines "i j" (0-based).
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
std::string to_text(const Digraph& d);

/// CanonicalForm format: single line "n: m_1 m_2 ... m_n".
CanonicalForm parse_canonical(const std::string& line);
std::string to_text(const CanonicalForm& c);

}  // namespace rhomax
