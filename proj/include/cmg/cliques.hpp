#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cmg/clique_solver.hpp"
#include "cmg/mixed_graph.hpp"
#include "cmg/relations.hpp"

namespace cmg {

inline constexpr std::uint64_t default_budget = 100'000'000;

struct PairWitness {
    int u = 0, v = 0;
    int via = -1;  // -1 direct, else midpoint vertex
};

// A vertex set plus, for every pair, the witnessing connection or special
// 2-path midpoint; midpoints may lie outside the set for relative cliques.
struct CliqueCertificate {
    std::vector<int> vertices;
    std::vector<PairWitness> pairs;
};

struct RelativeCliqueResult {
    bool ok = false;
    CliqueCertificate certificate;
    std::pair<int, int> failing_pair{-1, -1};
};

namespace detail {

inline void check_vertex_set(const MixedGraph& g, const std::vector<int>& R) {
    for (std::size_t i = 0; i < R.size(); ++i) {
        if (R[i] < 0 || R[i] >= g.order())
            throw std::invalid_argument("vertex set: vertex out of range");
        for (std::size_t j = i + 1; j < R.size(); ++j)
            if (R[i] == R[j]) throw std::invalid_argument("vertex set: duplicate vertex");
    }
}

}  // namespace detail

// True iff every pair in R sees each other; on success the certificate holds
// one witness per pair, on failure the first failing pair is reported.
inline RelativeCliqueResult is_relative_clique(const MixedGraph& g, const std::vector<int>& R) {
    detail::check_vertex_set(g, R);
    RelativeCliqueResult res;
    res.certificate.vertices = R;
    std::sort(res.certificate.vertices.begin(), res.certificate.vertices.end());
    const auto& vs = res.certificate.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            SeeWitness w = see_witness(g, vs[i], vs[j]);
            if (w.kind == SeeWitness::Kind::none) {
                res.ok = false;
                res.failing_pair = {vs[i], vs[j]};
                res.certificate.pairs.clear();
                return res;
            }
            res.certificate.pairs.push_back(
                {vs[i], vs[j], w.kind == SeeWitness::Kind::direct ? -1 : w.mid});
        }
    res.ok = true;
    return res;
}

struct OmegaRResult {
    int value = 0;
    CliqueCertificate certificate;
};

namespace detail {

inline CliqueCertificate certificate_from_see(const SeeGraph& sg, std::vector<int> verts) {
    CliqueCertificate cert;
    cert.vertices = std::move(verts);
    for (std::size_t i = 0; i < cert.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < cert.vertices.size(); ++j) {
            int u = cert.vertices[i], v = cert.vertices[j];
            cert.pairs.push_back({u, v, sg.witness_at(u, v)});
        }
    return cert;
}

}  // namespace detail

// Relative clique number: the clique number of the see-graph, certified by
// the lexicographically smallest maximum clique.
inline OmegaRResult omega_r(const MixedGraph& g) {
    SeeGraph sg = see_graph(g);
    std::vector<int> verts = lex_smallest_max_clique(sg.graph);
    return {static_cast<int>(verts.size()), detail::certificate_from_see(sg, std::move(verts))};
}

// An (m,n)-clique is a graph whose vertices pairwise see each other.
inline bool is_mn_clique(const MixedGraph& g) {
    int n = g.order();
    SeeGraph sg = see_graph(g);
    return sg.graph.edge_count() == n * (n - 1) / 2;
}

struct OmegaAResult {
    int value = 0;
    std::vector<int> vertices;
    bool exhaustive = true;
    std::uint64_t nodes = 0;
};

// Absolute clique number: the largest S whose induced subgraph is itself an
// (m,n)-clique, i.e. every special 2-path witness lies inside S. Candidates
// are cliques of the see-graph, re-validated with internal midpoints only.
inline OmegaAResult omega_a(const MixedGraph& g, std::uint64_t budget = default_budget) {
    OmegaAResult res;
    if (g.order() == 0) return res;
    SeeGraph sg = see_graph(g);
    int top = max_clique(sg.graph);

    auto internal_ok = [&](const std::vector<int>& set) {
        std::uint64_t mask = 0;
        for (int v : set) mask |= std::uint64_t{1} << v;
        for (std::size_t i = 0; i < set.size(); ++i)
            for (std::size_t j = i + 1; j < set.size(); ++j) {
                int u = set[i], w = set[j];
                if (g.adjacent(u, w)) continue;
                std::uint64_t mids = g.neighbors_mask(u) & g.neighbors_mask(w) & mask;
                bool seen = false;
                while (mids) {
                    int x = std::countr_zero(mids);
                    mids &= mids - 1;
                    if (g.code(u, x) != g.code(w, x)) {
                        seen = true;
                        break;
                    }
                }
                if (!seen) return false;
            }
        return true;
    };

    std::uint64_t left = budget;
    for (int s = top; s >= 1; --s) {
        bool exhausted = false;
        std::vector<int> found = first_clique_such_that(sg.graph, s, internal_ok, left, exhausted);
        if (!found.empty()) {
            res.value = s;
            res.vertices = std::move(found);
            res.nodes = budget - left;
            return res;
        }
        if (exhausted) {
            res.value = 1;
            res.vertices = {0};
            res.exhaustive = false;
            res.nodes = budget - left;
            return res;
        }
    }
    res.nodes = budget - left;
    return res;
}

}  // namespace cmg
