#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cmg/clique_solver.hpp"
#include "cmg/cliques.hpp"
#include "cmg/mixed_graph.hpp"
#include "cmg/relations.hpp"
#include "cmg/simple_graph.hpp"

namespace cmg {

struct DegeneracyResult {
    int value = 0;
    std::vector<int> elimination_order;
};

// Smallest k such that every subgraph has a vertex of degree <= k, by
// iterated minimum-degree elimination.
inline DegeneracyResult degeneracy(const SimpleGraph& g) {
    DegeneracyResult res;
    int n = g.order();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::uint64_t alive = all_vertices_mask(g);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        std::uint64_t scan = alive;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (pick < 0 || deg[v] < deg[pick]) pick = v;
        }
        res.value = std::max(res.value, deg[pick]);
        res.elimination_order.push_back(pick);
        alive &= ~(std::uint64_t{1} << pick);
        std::uint64_t nb = g.neighbors_mask(pick) & alive;
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            --deg[v];
        }
    }
    return res;
}

// omega_r over graphs of maximum degree delta: floor((p-1)/p * delta^2) + delta + 1.
inline long long max_degree_rel_bound(int p, int delta) {
    if (p < 2) throw std::invalid_argument("max_degree_rel_bound: requires p >= 2");
    if (delta < 0) throw std::invalid_argument("max_degree_rel_bound: delta < 0");
    long long d = delta;
    return (p - 1) * d * d / p + d + 1;
}

// Degeneracy bound for the see-graph: floor((p-1) * delta^2 / p) + delta.
inline long long see_degeneracy_bound(int p, int delta) {
    if (p < 2) throw std::invalid_argument("see_degeneracy_bound: requires p >= 2");
    if (delta < 0) throw std::invalid_argument("see_degeneracy_bound: delta < 0");
    long long d = delta;
    return (p - 1) * d * d / p + d;
}

inline std::pair<long long, long long> planar_bounds(int p) {
    if (p < 2) throw std::invalid_argument("planar_bounds: requires p >= 2");
    long long q = p;
    return {3 * q * q + q + 1, 42 * q * q + 8};
}

inline long long outerplanar_bound(int p) {
    if (p < 2) throw std::invalid_argument("outerplanar_bound: requires p >= 2");
    return 3ll * p + 1;
}

// chi over all paths: 2m+n+eps with eps = 1 for n odd or n = 0, else 2.
inline int path_bound(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("path_bound: negative parameter");
    int eps = (n == 0 || n % 2 == 1) ? 1 : 2;
    return 2 * m + n + eps;
}

// chi over all forests: 2m+1 when n = 0, else 2(m + floor(n/2) + 1).
inline int forest_bound(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("forest_bound: negative parameter");
    return n == 0 ? 2 * m + 1 : 2 * (m + n / 2 + 1);
}

struct BoundReport {
    int m = 0, n = 0, p = 0, delta = 0;
    long long bound = 0;
    long long observed = 0;
    bool holds = false;
    std::vector<int> witness;  // elimination order realizing the observed value
};

// Checks the see-graph degeneracy bound on a concrete graph.
inline BoundReport verify_lemma32(const MixedGraph& g) {
    BoundReport rep;
    rep.m = g.m();
    rep.n = g.n();
    rep.p = 2 * g.m() + g.n();
    SimpleGraph u = underlying(g);
    rep.delta = u.max_degree();
    rep.bound = see_degeneracy_bound(rep.p, rep.delta);
    DegeneracyResult deg = degeneracy(see_graph(g).graph);
    rep.observed = deg.value;
    rep.witness = deg.elimination_order;
    rep.holds = rep.observed <= rep.bound;
    return rep;
}

struct ConfigWitness {
    int center = -1;
    std::vector<int> vertices;
};

namespace detail {

// Lexicographically smallest independent (in `u`) subset of `cand` of the
// given size, or empty: a clique search on the complement.
inline std::vector<int> independent_subset(const SimpleGraph& u, const std::vector<int>& cand,
                                           int size) {
    int k = static_cast<int>(cand.size());
    if (size > k) return {};
    SimpleGraph comp(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!u.has_edge(cand[i], cand[j])) comp.add_edge(i, j);
    std::uint64_t budget = ~std::uint64_t{0};
    bool exhausted = false;
    std::vector<int> idx = first_clique_such_that(
        comp, size, [](const std::vector<int>&) { return true; }, budget, exhausted);
    std::vector<int> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(cand[i]);
    return out;
}

inline void require_relative_clique(const MixedGraph& g, const std::vector<int>& R) {
    if (!is_relative_clique(g, R).ok)
        throw std::invalid_argument("detector: R is not a relative clique");
}

}  // namespace detail

// F1: 2p+1 vertices of R, pairwise non-adjacent in U(G), that all agree on
// some vertex (equal adjacency type toward it). Purely combinatorial; the
// planarity-based conclusions are the caller's business.
inline std::optional<ConfigWitness> detect_F1(const MixedGraph& g, const std::vector<int>& R) {
    detail::require_relative_clique(g, R);
    int p = 2 * g.m() + g.n();
    int need = 2 * p + 1;
    SimpleGraph u = underlying(g);
    for (int center = 0; center < g.order(); ++center) {
        for (int code = 1; code <= g.n() + 2 * g.m(); ++code) {
            std::vector<int> cand;
            for (int x : R)
                if (x != center && g.code(x, center) == code) cand.push_back(x);
            if (static_cast<int>(cand.size()) < need) continue;
            std::sort(cand.begin(), cand.end());
            std::vector<int> set = detail::independent_subset(u, cand, need);
            if (!set.empty()) return ConfigWitness{center, std::move(set)};
        }
    }
    return std::nullopt;
}

// F2: 2p^2+1 vertices of R, pairwise non-adjacent in U(G), all adjacent to
// some vertex.
inline std::optional<ConfigWitness> detect_F2(const MixedGraph& g, const std::vector<int>& R) {
    detail::require_relative_clique(g, R);
    int p = 2 * g.m() + g.n();
    int need = 2 * p * p + 1;
    SimpleGraph u = underlying(g);
    for (int center = 0; center < g.order(); ++center) {
        std::vector<int> cand;
        for (int x : R)
            if (x != center && g.adjacent(x, center)) cand.push_back(x);
        if (static_cast<int>(cand.size()) < need) continue;
        std::sort(cand.begin(), cand.end());
        std::vector<int> set = detail::independent_subset(u, cand, need);
        if (!set.empty()) return ConfigWitness{center, std::move(set)};
    }
    return std::nullopt;
}

}  // namespace cmg
