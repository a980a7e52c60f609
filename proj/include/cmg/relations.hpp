#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cmg/mixed_graph.hpp"
#include "cmg/simple_graph.hpp"

namespace cmg {

// Type of the x-v connection as seen from x, or nullopt if non-adjacent.
inline std::optional<AdjacencyType> adjacency_type_toward(const MixedGraph& g, int x, int v) {
    if (x == v) throw std::invalid_argument("adjacency_type_toward: x == v");
    type_code c = g.code(x, v);
    if (c == 0) return std::nullopt;
    return decode_type(c, g.m(), g.n());
}

// A 2-path u-v-w is special iff its legs differ when both are read toward
// the midpoint. This single comparison covers every case: edges of different
// colors, any two arcs through the midpoint (in->out, out->in, same-side
// different colors), and edge-versus-arc.
inline bool is_special_two_path(const MixedGraph& g, int u, int v, int w) {
    if (u == v || w == v || u == w)
        throw std::invalid_argument("is_special_two_path: vertices not distinct");
    type_code a = g.code(u, v);
    type_code b = g.code(w, v);
    if (a == 0 || b == 0) throw std::invalid_argument("is_special_two_path: missing leg");
    return a != b;
}

struct SeeWitness {
    enum class Kind : std::uint8_t { none, direct, via };
    Kind kind = Kind::none;
    int mid = -1;
};

// Witness that u sees w: the direct connection if adjacent, else the special
// 2-path with the smallest midpoint index, else none.
inline SeeWitness see_witness(const MixedGraph& g, int u, int w) {
    if (u == w) throw std::invalid_argument("see_witness: u == w");
    if (g.adjacent(u, w)) return {SeeWitness::Kind::direct, -1};
    std::uint64_t common = g.neighbors_mask(u) & g.neighbors_mask(w);
    while (common) {
        int v = std::countr_zero(common);
        common &= common - 1;
        if (g.code(u, v) != g.code(w, v)) return {SeeWitness::Kind::via, v};
    }
    return {SeeWitness::Kind::none, -1};
}

inline bool sees(const MixedGraph& g, int u, int w) {
    return see_witness(g, u, w).kind != SeeWitness::Kind::none;
}

// True iff both a and b are adjacent to c with the same adjacency type
// toward c.
inline bool agree_on(const MixedGraph& g, int a, int b, int c) {
    if (a == b) throw std::invalid_argument("agree_on: a == b");
    type_code ta = g.code(a, c);
    type_code tb = g.code(b, c);
    if (ta == 0 || tb == 0) throw std::invalid_argument("agree_on: missing adjacency");
    return ta == tb;
}

// The graph on V(G) whose edges are exactly the seeing pairs, with a witness
// per edge: -1 for a direct connection, otherwise the smallest midpoint.
struct SeeGraph {
    SimpleGraph graph;
    std::vector<std::int8_t> witness;  // order*order; -2 none, -1 direct, >=0 midpoint

    int order() const { return graph.order(); }

    std::int8_t witness_at(int u, int v) const {
        return witness[static_cast<std::size_t>(u) * graph.order() + v];
    }
};

inline SeeGraph see_graph(const MixedGraph& g) {
    int n = g.order();
    SeeGraph sg{SimpleGraph(n), std::vector<std::int8_t>(static_cast<std::size_t>(n) * n, -2)};
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            SeeWitness ww = see_witness(g, u, w);
            if (ww.kind == SeeWitness::Kind::none) continue;
            sg.graph.add_edge(u, w);
            std::int8_t code = ww.kind == SeeWitness::Kind::direct
                                   ? std::int8_t{-1}
                                   : static_cast<std::int8_t>(ww.mid);
            sg.witness[static_cast<std::size_t>(u) * n + w] = code;
            sg.witness[static_cast<std::size_t>(w) * n + u] = code;
        }
    return sg;
}

}  // namespace cmg
