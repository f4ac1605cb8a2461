#include "rhomax/digraph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rhomax {

namespace {

constexpr int kWordBits = 64;

int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

bool test_bit(std::span<const std::uint64_t> w, int i) {
    return (w[i / kWordBits] >> (i % kWordBits)) & 1u;
}

int popcount(std::span<const std::uint64_t> w) {
    int c = 0;
    for (std::uint64_t x : w) c += std::popcount(x);
    return c;
}

}  // namespace

Digraph::Digraph(int n) : n_(n), words_(words_for(n)), bits_(static_cast<std::size_t>(n) * words_for(n), 0) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    Digraph d(n);
    for (auto [i, j] : arcs) {
        if (i == j) throw std::invalid_argument("loop forbidden");
        d.check_endpoints(i, j);
        if (d.arc(i, j)) throw std::invalid_argument("multiarc forbidden");
        d.add_arc(i, j);
    }
    return d;
}

Digraph Digraph::complete(int k) {
    Digraph d(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) d.add_arc(i, j);
    return d;
}

void Digraph::check_endpoints(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw std::invalid_argument("vertex index out of range");
}

bool Digraph::arc(int i, int j) const {
    check_endpoints(i, j);
    return (bits_[static_cast<std::size_t>(i) * words_ + j / kWordBits] >> (j % kWordBits)) & 1u;
}

void Digraph::add_arc(int i, int j) {
    if (i == j) throw std::invalid_argument("loop forbidden");
    check_endpoints(i, j);
    std::uint64_t& w = bits_[static_cast<std::size_t>(i) * words_ + j / kWordBits];
    std::uint64_t mask = std::uint64_t{1} << (j % kWordBits);
    if (!(w & mask)) {
        w |= mask;
        ++arcs_;
    }
}

void Digraph::remove_arc(int i, int j) {
    check_endpoints(i, j);
    std::uint64_t& w = bits_[static_cast<std::size_t>(i) * words_ + j / kWordBits];
    std::uint64_t mask = std::uint64_t{1} << (j % kWordBits);
    if (w & mask) {
        w &= ~mask;
        --arcs_;
    }
}

std::span<const std::uint64_t> Digraph::row(int i) const {
    return {bits_.data() + static_cast<std::size_t>(i) * words_, static_cast<std::size_t>(words_)};
}

int Digraph::out_degree(int i) const { return popcount(row(i)); }

int Digraph::in_degree(int i) const {
    int c = 0;
    for (int j = 0; j < n_; ++j)
        if (j != i && arc(j, i)) ++c;
    return c;
}

std::vector<int> Digraph::out_neighbors(int i) const {
    std::vector<int> out;
    auto r = row(i);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t x = r[w];
        while (x) {
            int b = std::countr_zero(x);
            out.push_back(w * kWordBits + b);
            x &= x - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(arcs_));
    for (int i = 0; i < n_; ++i)
        for (int j : out_neighbors(i)) out.emplace_back(i, j);
    return out;
}

Digraph Digraph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    Digraph d(n_);
    for (int i = 0; i < n_; ++i)
        for (int j : out_neighbors(i)) d.add_arc(perm[i], perm[j]);
    return d;
}

namespace {

// Iterative Tarjan; classes come out in reverse topological order.
struct TarjanState {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> index, low, on_stack;
    std::vector<int> stack;
    int counter = 0;
    std::vector<std::vector<int>> sccs;

    explicit TarjanState(const std::vector<std::vector<int>>& a)
        : adj(a), index(a.size(), -1), low(a.size(), 0), on_stack(a.size(), 0) {}

    void run(int root) {
        struct Frame {
            int v;
            std::size_t next;
        };
        std::vector<Frame> frames{{root, 0}};
        visit(root);
        while (!frames.empty()) {
            auto& [v, next] = frames.back();
            if (next < adj[v].size()) {
                int w = adj[v][next++];
                if (index[w] == -1) {
                    visit(w);
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) pop_scc(v);
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().v;
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    }

    void visit(int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
    }

    void pop_scc(int v) {
        std::vector<int> scc;
        int w;
        do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            scc.push_back(w);
        } while (w != v);
        std::sort(scc.begin(), scc.end());
        sccs.push_back(std::move(scc));
    }
};

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(
    int n, const std::vector<std::vector<int>>& out_adj) {
    TarjanState st(out_adj);
    for (int v = 0; v < n; ++v)
        if (st.index[v] == -1) st.run(v);
    return std::move(st.sccs);
}

std::vector<std::vector<int>> strongly_connected_components(const Digraph& d) {
    std::vector<std::vector<int>> adj(d.order());
    for (int i = 0; i < d.order(); ++i) adj[i] = d.out_neighbors(i);
    return strongly_connected_components(d.order(), adj);
}

bool is_strongly_connected(const Digraph& d) {
    if (d.order() == 0) return false;
    return strongly_connected_components(d).size() == 1;
}

namespace {

using Mask = std::vector<std::uint64_t>;

int mask_popcount(const Mask& m) {
    int c = 0;
    for (auto x : m) c += std::popcount(x);
    return c;
}

bool mask_empty(const Mask& m) {
    for (auto x : m)
        if (x) return false;
    return true;
}

// Exact maximum clique, Bron-Kerbosch with pivoting.
struct MaxClique {
    const std::vector<Mask>& nbr;
    int words;
    int best = 0;

    void expand(int size, Mask p, Mask x) {
        if (mask_empty(p)) {
            if (mask_empty(x)) best = std::max(best, size);
            return;
        }
        if (size + mask_popcount(p) <= best) return;

        int pivot = pick_pivot(p, x);
        Mask cand(words);
        for (int w = 0; w < words; ++w) cand[w] = p[w] & ~nbr[pivot][w];
        for (int w = 0; w < words; ++w) {
            while (cand[w]) {
                int v = w * kWordBits + std::countr_zero(cand[w]);
                cand[w] &= cand[w] - 1;
                Mask p2(words), x2(words);
                for (int u = 0; u < words; ++u) {
                    p2[u] = p[u] & nbr[v][u];
                    x2[u] = x[u] & nbr[v][u];
                }
                expand(size + 1, std::move(p2), std::move(x2));
                p[w] &= ~(std::uint64_t{1} << (v % kWordBits));
                x[w] |= std::uint64_t{1} << (v % kWordBits);
            }
        }
    }

    int pick_pivot(const Mask& p, const Mask& x) const {
        int pivot = -1, best_cover = -1;
        for (int w = 0; w < words; ++w) {
            std::uint64_t both = p[w] | x[w];
            while (both) {
                int u = w * kWordBits + std::countr_zero(both);
                both &= both - 1;
                int cover = 0;
                for (int k = 0; k < words; ++k) cover += std::popcount(p[k] & nbr[u][k]);
                if (cover > best_cover) {
                    best_cover = cover;
                    pivot = u;
                }
            }
        }
        return pivot;
    }
};

}  // namespace

int clique_number(const Digraph& d) {
    int n = d.order();
    if (n == 0) return 0;
    int words = words_for(n);
    std::vector<Mask> bd(n, Mask(words, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d.arc(i, j) && d.arc(j, i)) {
                bd[i][j / kWordBits] |= std::uint64_t{1} << (j % kWordBits);
                bd[j][i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
            }
    MaxClique mc{bd, words};
    mc.best = 1;  // a single vertex is K<->_1
    Mask p(words, 0);
    for (int i = 0; i < n; ++i) p[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
    mc.expand(0, std::move(p), Mask(words, 0));
    return mc.best;
}

Digraph remove_isolated(const Digraph& d) {
    std::vector<int> keep;
    for (int i = 0; i < d.order(); ++i)
        if (d.out_degree(i) > 0 || d.in_degree(i) > 0) keep.push_back(i);
    if (static_cast<int>(keep.size()) == d.order()) return d;
    std::vector<int> newindex(d.order(), -1);
    for (std::size_t s = 0; s < keep.size(); ++s) newindex[keep[s]] = static_cast<int>(s);
    Digraph out(static_cast<int>(keep.size()));
    for (int i : keep)
        for (int j : d.out_neighbors(i)) out.add_arc(newindex[i], newindex[j]);
    return out;
}

Digraph expand_canonical(const CanonicalForm& c) {
    if (static_cast<int>(c.m.size()) != c.n)
        throw std::invalid_argument("canonical form length mismatch");
    Digraph d(c.n);
    for (int i = 0; i < c.n; ++i) {
        if (c.m[i] < 0 || c.m[i] > c.n)
            throw std::invalid_argument("prefix length out of range");
        for (int j = 0; j < c.m[i]; ++j)
            if (j != i) d.add_arc(i, j);
    }
    return d;
}

bool canonical_form(const Digraph& d, CanonicalForm& out) {
    out.n = d.order();
    out.m.assign(d.order(), 0);
    for (int i = 0; i < d.order(); ++i) {
        auto nb = d.out_neighbors(i);
        int m = nb.empty() ? 0 : nb.back() + 1;
        if (m == i + 1) m = i;  // same set; keep the normalized length
        // the row must really be the prefix {0..m-1} minus self
        int expect = m - (m > i ? 1 : 0);
        if (static_cast<int>(nb.size()) != expect) return false;
        for (std::size_t s = 0; s < nb.size(); ++s)
            if (nb[s] != static_cast<int>(s) + (static_cast<int>(s) >= i ? 1 : 0)) return false;
        out.m[i] = m;
    }
    return true;
}

DssCheck is_member_dss(const Digraph& d) {
    DssCheck r;
    if (!is_strongly_connected(d)) {
        r.violation = DssCheck::Violation::not_strongly_connected;
        return r;
    }
    int n = d.order();
    // condition (i): an arc (i, j) with i < j forces the whole prefix
    // {0..j} \ {i} into N+(i)
    for (int i = 0; i < n; ++i) {
        for (int j : d.out_neighbors(i)) {
            if (j <= i) continue;
            for (int l = 0; l < j; ++l) {
                if (l != i && !d.arc(i, l)) {
                    r.violation = DssCheck::Violation::prefix;
                    r.i = i;
                    r.j = j;
                    r.l = l;
                    return r;
                }
            }
        }
    }
    // condition (ii): N+(i) \ {j} contains N+(j) \ {i} for i < j
    // (l runs over N+(j), so l != j already; membership in N+(i) \ {j}
    // reduces to the arc (i, l))
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int l : d.out_neighbors(j)) {
                if (l != i && !d.arc(i, l)) {
                    r.violation = DssCheck::Violation::nesting;
                    r.i = i;
                    r.j = j;
                    r.l = l;
                    return r;
                }
            }
        }
    }
    r.member = true;
    return r;
}

Digraph parse_digraph(std::istream& in) {
    int n = 0;
    long long e = 0;
    if (!(in >> n >> e)) throw std::invalid_argument("bad digraph header (want \"n e\")");
    if (n < 0 || e < 0) throw std::invalid_argument("bad digraph header (want \"n e\")");
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(e));
    for (long long a = 0; a < e; ++a) {
        int i = 0, j = 0;
        if (!(in >> i >> j)) throw std::invalid_argument("truncated arc list");
        arcs.emplace_back(i, j);
    }
    return Digraph::from_arcs(n, arcs);
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

std::string to_text(const Digraph& d) {
    std::ostringstream out;
    out << d.order() << ' ' << d.arc_count() << '\n';
    for (auto [i, j] : d.arcs()) out << i << ' ' << j << '\n';
    return out.str();
}

CanonicalForm parse_canonical(const std::string& line) {
    std::istringstream in(line);
    int n = 0;
    char colon = 0;
    if (!(in >> n >> colon) || colon != ':')
        throw std::invalid_argument("bad canonical form (want \"n: m_1 ... m_n\")");
    CanonicalForm c{n, {}};
    c.m.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int m = 0;
        if (!(in >> m)) throw std::invalid_argument("truncated canonical form");
        c.m.push_back(m);
    }
    return c;
}

std::string to_text(const CanonicalForm& c) {
    std::ostringstream out;
    out << c.n << ':';
    for (int m : c.m) out << ' ' << m;
    return out.str();
}

}  // namespace rhomax
