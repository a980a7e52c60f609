#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cmg/bounds.hpp"
#include "cmg/clique_solver.hpp"
#include "cmg/enumerate.hpp"
#include "cmg/mixed_graph.hpp"
#include "cmg/named_graphs.hpp"
#include "cmg/relations.hpp"

namespace cmg {

using VertexMapping = std::vector<int>;

// A partition of the vertex set; class labels appear in first-use order.
struct Partition {
    int classes = 0;
    std::vector<int> assignment;
};

// True iff f maps every connection of g onto a connection of h with the
// same adjacency type.
inline bool is_homomorphism(const MixedGraph& g, const MixedGraph& h, const VertexMapping& f) {
    if (g.m() != h.m() || g.n() != h.n())
        throw std::invalid_argument("is_homomorphism: (m,n) mismatch");
    if (static_cast<int>(f.size()) != g.order())
        throw std::invalid_argument("is_homomorphism: mapping has wrong size");
    for (int im : f)
        if (im < 0 || im >= h.order())
            throw std::invalid_argument("is_homomorphism: image out of range");
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            type_code c = g.code(u, v);
            if (c == 0) continue;
            if (h.code(f[u], f[v]) != c) return false;  // f[u] == f[v] gives code 0
        }
    return true;
}

enum class HomStatus { found, none, budget_exceeded };

struct HomResult {
    HomStatus status = HomStatus::none;
    VertexMapping mapping;
    std::uint64_t nodes = 0;
};

// Backtracking over vertex images in ascending order; the first mapping
// found is the lexicographically smallest one.
inline HomResult hom_exists(const MixedGraph& g, const MixedGraph& h,
                            std::uint64_t budget = default_budget) {
    if (g.m() != h.m() || g.n() != h.n())
        throw std::invalid_argument("hom_exists: (m,n) mismatch");
    HomResult res;
    int n = g.order();
    if (n == 0) {
        res.status = HomStatus::found;
        return res;
    }
    if (h.order() == 0) return res;
    VertexMapping f(n, -1);
    std::uint64_t nodes = 0;
    bool exhausted = false;

    auto rec = [&](auto&& self, int v) -> bool {
        if (nodes >= budget) {
            exhausted = true;
            return false;
        }
        ++nodes;
        if (v == n) return true;
        for (int image = 0; image < h.order(); ++image) {
            bool ok = true;
            for (int u = 0; u < v; ++u) {
                type_code c = g.code(v, u);
                if (c != 0 && h.code(image, f[u]) != c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                f[v] = image;
                if (self(self, v + 1)) return true;
                f[v] = -1;
                if (exhausted) return false;
            }
        }
        return false;
    };

    bool found = rec(rec, 0);
    res.nodes = nodes;
    if (found) {
        res.status = HomStatus::found;
        res.mapping = f;
    } else {
        res.status = exhausted ? HomStatus::budget_exceeded : HomStatus::none;
    }
    return res;
}

struct QuotientConflict {
    enum class Kind { loop, type_clash };
    Kind kind = Kind::loop;
    int at = -1;  // clashing midpoint for type_clash
};

struct QuotientResult {
    bool ok = false;
    MixedGraph graph;
    VertexMapping mapping;
    QuotientConflict conflict;
};

// Identifies u and v if they do not see each other; the induced mapping is a
// homomorphism. Adjacent pairs conflict with a loop, special 2-paths with a
// type clash at the smallest such midpoint.
inline QuotientResult quotient_pair(const MixedGraph& g, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw std::invalid_argument("quotient_pair: bad vertex pair");
    QuotientResult res;
    if (g.adjacent(u, v)) {
        res.conflict = {QuotientConflict::Kind::loop, -1};
        return res;
    }
    std::uint64_t common = g.neighbors_mask(u) & g.neighbors_mask(v);
    while (common) {
        int x = std::countr_zero(common);
        common &= common - 1;
        if (g.code(u, x) != g.code(v, x)) {
            res.conflict = {QuotientConflict::Kind::type_clash, x};
            return res;
        }
    }
    int keep = std::min(u, v), drop = std::max(u, v);
    VertexMapping f(g.order());
    for (int z = 0; z < g.order(); ++z) {
        int image = z == drop ? keep : z;
        f[z] = image - (image > drop ? 1 : 0);
    }
    MixedGraph h(g.m(), g.n(), g.order() - 1);
    for (const Connection& c : g.connections()) {
        int a = f[c.u], b = f[c.v];
        if (h.adjacent(a, b)) continue;  // duplicate of the same type
        if (c.kind == ConnKind::edge)
            h.add_edge(a, b, c.color);
        else
            h.add_arc(a, b, c.color);
    }
    res.ok = true;
    res.graph = std::move(h);
    res.mapping = std::move(f);
    return res;
}

struct ChiResult {
    int value = 0;
    Partition witness;
    bool exhaustive = true;
    std::uint64_t nodes = 0;
};

namespace detail {

// Incremental validity bookkeeping for partition search: classes must be
// independent, and between any two classes all connections must share one
// adjacency type (then the quotient is itself a homomorphic image).
struct PartitionSearch {
    const MixedGraph& g;
    int n;
    std::vector<int> cls;              // -1 unassigned
    std::vector<type_code> constraint;  // (n+1)^2, 0 = free
    std::vector<std::pair<int, int>> trail;

    explicit PartitionSearch(const MixedGraph& graph)
        : g(graph),
          n(graph.order()),
          cls(graph.order(), -1),
          constraint(static_cast<std::size_t>(graph.order() + 1) * (graph.order() + 1), 0) {}

    type_code& ct(int a, int b) { return constraint[static_cast<std::size_t>(a) * (n + 1) + b]; }

    // Returns trail length to pass to undo(), or -1 on conflict.
    int place(int v, int q) {
        int mark = static_cast<int>(trail.size());
        std::uint64_t nb = g.neighbors_mask(v);
        while (nb) {
            int x = std::countr_zero(nb);
            nb &= nb - 1;
            int r = cls[x];
            if (r < 0) continue;
            if (r == q) {
                undo(mark);
                return -1;
            }
            type_code c = g.code(v, x);
            type_code& slot = ct(q, r);
            if (slot == 0) {
                slot = c;
                ct(r, q) = mirror_code(c, g.m(), g.n());
                trail.emplace_back(q, r);
            } else if (slot != c) {
                undo(mark);
                return -1;
            }
        }
        cls[v] = q;
        return mark;
    }

    void unplace(int v, int mark) {
        cls[v] = -1;
        undo(mark);
    }

    void undo(int mark) {
        while (static_cast<int>(trail.size()) > mark) {
            auto [q, r] = trail.back();
            trail.pop_back();
            ct(q, r) = 0;
            ct(r, q) = 0;
        }
    }
};

}  // namespace detail

// Exact chi via branch and bound over vertex partitions. The witness is the
// lexicographically smallest optimal assignment in first-use labeling.
inline ChiResult chi_mn(const MixedGraph& g, std::uint64_t budget = default_budget) {
    if (g.order() > 12) throw std::invalid_argument("chi_mn: order above search cap 12");
    ChiResult res;
    int n = g.order();
    if (n == 0) return res;

    SeeGraph sg = see_graph(g);
    int lower = max_clique(sg.graph);

    // value phase: vertices by descending see-degree
    std::vector<int> vorder(n);
    for (int i = 0; i < n; ++i) vorder[i] = i;
    std::stable_sort(vorder.begin(), vorder.end(), [&](int a, int b) {
        return sg.graph.degree(a) > sg.graph.degree(b);
    });

    detail::PartitionSearch search(g);
    std::uint64_t nodes = 0;
    bool exhausted = false;
    int best = n + 1;
    std::vector<int> best_cls;

    auto value_dfs = [&](auto&& self, int i, int used) -> void {
        if (nodes >= budget) {
            exhausted = true;
            return;
        }
        ++nodes;
        if (used >= best || best == lower) return;
        if (i == n) {
            best = used;
            best_cls = search.cls;
            return;
        }
        int v = vorder[i];
        int limit = std::min(used, best - 2);  // may open class `used` if used <= best-2
        for (int q = 0; q <= limit && !exhausted; ++q) {
            int mark = search.place(v, q);
            if (mark < 0) continue;
            self(self, i + 1, std::max(used, q + 1));
            search.unplace(v, mark);
        }
    };
    value_dfs(value_dfs, 0, 0);

    res.nodes = nodes;
    if (best > n) {
        // budget ran out before any complete partition; identity partition
        best = n;
        best_cls.resize(n);
        for (int i = 0; i < n; ++i) best_cls[i] = i;
        exhausted = true;
    }
    res.exhaustive = !exhausted;
    res.value = best;

    // witness phase: natural vertex order, first solution is lex smallest
    if (res.exhaustive) {
        detail::PartitionSearch lex(g);
        std::vector<int> found;
        auto lex_dfs = [&](auto&& self, int v, int used) -> bool {
            ++nodes;
            if (v == n) {
                found = lex.cls;
                return true;
            }
            int limit = std::min(used, best - 1);
            for (int q = 0; q <= limit; ++q) {
                int mark = lex.place(v, q);
                if (mark < 0) continue;
                if (self(self, v + 1, std::max(used, q + 1))) return true;
                lex.unplace(v, mark);
            }
            return false;
        };
        lex_dfs(lex_dfs, 0, 0);
        res.witness.assignment = found;
        res.nodes = nodes;
    } else {
        // normalize the best-known assignment to first-use labels
        std::vector<int> relabel(n, -1);
        std::vector<int> out(n);
        int next = 0;
        for (int v = 0; v < n; ++v) {
            int c = best_cls[v];
            if (relabel[c] < 0) relabel[c] = next++;
            out[v] = relabel[c];
        }
        res.witness.assignment = out;
    }
    res.witness.classes = best;
    return res;
}

enum class GraphFamily { paths, forests };

struct FamilyChiReport {
    GraphFamily family = GraphFamily::paths;
    int m = 0, n = 0, cap = 0;
    int bound = 0;
    int attained = 0;
    bool within_bound = false;
    MixedGraph witness;
    Partition witness_partition;
    bool exhaustive = true;
    std::uint64_t graphs_swept = 0;
    std::uint64_t colorings_swept = 0;
};

namespace detail {

// Assigns letter `l` (0..n+2m-1) to underlying edge (u,v), u < v.
inline void add_lettered(MixedGraph& g, int u, int v, int letter) {
    if (letter < g.n())
        g.add_edge(u, v, letter + 1);
    else if (letter < g.n() + g.m())
        g.add_arc(u, v, letter - g.n() + 1);
    else
        g.add_arc(v, u, letter - g.n() - g.m() + 1);
}

// Representative letters for the first edge under color permutations and
// global arc reversal: one edge color and one arc suffice.
inline std::vector<int> first_edge_letters(int m, int n) {
    std::vector<int> reps;
    if (n >= 1) reps.push_back(0);
    if (m >= 1) reps.push_back(n);
    return reps;
}

template <class Fn>
bool sweep_colorings(const SimpleGraph& u, int m, int n, Fn&& fn) {
    auto edges = u.edges();
    int e = static_cast<int>(edges.size());
    int letters = n + 2 * m;
    if (e == 0) {
        MixedGraph g(m, n, u.order());
        return fn(g);
    }
    if (letters == 0) throw std::invalid_argument("sweep: no letters (m = n = 0)");
    std::vector<int> digits(e, 0);
    std::vector<int> reps = first_edge_letters(m, n);
    for (int first : reps) {
        digits.assign(e, 0);
        digits[0] = first;
        while (true) {
            MixedGraph g(m, n, u.order());
            for (int i = 0; i < e; ++i)
                add_lettered(g, edges[i].first, edges[i].second, digits[i]);
            if (!fn(g)) return false;
            int i = e - 1;
            while (i >= 1 && digits[i] == letters - 1) digits[i--] = 0;
            if (i == 0) break;
            ++digits[i];
        }
    }
    return true;
}

}  // namespace detail

// Sweeps every coloring of every family member up to the size cap, checks
// the attained chi against the closed-form family bound, and reports the
// maximum with a witness.
inline FamilyChiReport family_chi_check(GraphFamily family, int m, int n, int size_cap,
                                        std::uint64_t budget = default_budget) {
    if (2 * m + n > 4) throw std::invalid_argument("family_chi_check: p above sweep cap 4");
    if (size_cap < 1 || size_cap > 10)
        throw std::invalid_argument("family_chi_check: size_cap out of range 1..10");
    FamilyChiReport rep;
    rep.family = family;
    rep.m = m;
    rep.n = n;
    rep.cap = size_cap;
    rep.bound = family == GraphFamily::paths ? path_bound(m, n) : forest_bound(m, n);

    std::vector<SimpleGraph> members;
    if (family == GraphFamily::paths) {
        for (int k = 1; k <= size_cap; ++k) members.push_back(path_graph(k));
    } else {
        members = enumerate_trees(size_cap);
    }

    std::uint64_t nodes = 0;
    for (const SimpleGraph& u : members) {
        ++rep.graphs_swept;
        bool keep_going = detail::sweep_colorings(u, m, n, [&](const MixedGraph& g) {
            ++rep.colorings_swept;
            ChiResult chi = chi_mn(g, budget - std::min(budget, nodes));
            nodes += chi.nodes;
            if (!chi.exhaustive || nodes >= budget) {
                rep.exhaustive = false;
                return false;
            }
            if (chi.value > rep.attained) {
                rep.attained = chi.value;
                rep.witness = g;
                rep.witness_partition = chi.witness;
            }
            return true;
        });
        if (!keep_going) break;
    }
    rep.within_bound = rep.attained <= rep.bound;
    return rep;
}

}  // namespace cmg
