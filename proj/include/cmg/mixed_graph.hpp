#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmg/simple_graph.hpp"

namespace cmg {

// Caps chosen so every adjacency-type code fits one byte: p = 2m+n <= 32.
inline constexpr int max_colors = 16;

enum class ConnKind : std::uint8_t { edge, arc };

// One underlying edge. Edges are stored with u < v; an arc points u -> v.
struct Connection {
    int u = 0, v = 0;
    ConnKind kind = ConnKind::edge;
    int color = 0;
};

// The kind of connection between an ordered pair (x, y), seen from x:
// an edge of some color, an arc x -> y, or an arc y -> x.
struct AdjacencyType {
    enum class Kind : std::uint8_t { edge, arc_out, arc_in };
    Kind kind = Kind::edge;
    int color = 0;
    friend bool operator==(const AdjacencyType&, const AdjacencyType&) = default;
};

// Dense byte codes for adjacency types toward a vertex:
//   0            no connection
//   1..n         edge of that color
//   n+1..n+m     arc leaving the viewing vertex, colors 1..m
//   n+m+1..n+2m  arc entering the viewing vertex, colors 1..m
using type_code = std::int8_t;

inline type_code mirror_code(type_code c, int m, int n) {
    if (c <= n) return c;
    if (c <= n + m) return static_cast<type_code>(c + m);
    return static_cast<type_code>(c - m);
}

inline AdjacencyType decode_type(type_code c, int m, int n) {
    if (c <= 0 || c > n + 2 * m) throw std::logic_error("decode_type: bad code");
    if (c <= n) return {AdjacencyType::Kind::edge, c};
    if (c <= n + m) return {AdjacencyType::Kind::arc_out, c - n};
    return {AdjacencyType::Kind::arc_in, c - n - m};
}

inline type_code encode_type(const AdjacencyType& t, int m, int n) {
    switch (t.kind) {
        case AdjacencyType::Kind::edge: return static_cast<type_code>(t.color);
        case AdjacencyType::Kind::arc_out: return static_cast<type_code>(n + t.color);
        case AdjacencyType::Kind::arc_in: return static_cast<type_code>(n + m + t.color);
    }
    throw std::logic_error("encode_type: bad kind");
}

// An (m,n)-colored mixed graph: a simple underlying graph whose every edge
// carries either one of n edge colors or one of m arc colors plus a direction.
//
// The raw connection list is kept verbatim so validate() can report
// out-of-range records; the type-code matrix only ever holds well-formed
// connections, and the algorithms read the matrix.
class MixedGraph {
public:
    MixedGraph() : MixedGraph(0, 0, 0) {}

    MixedGraph(int m, int n, int order) : m_(m), n_(n), order_(order) {
        if (m < 0 || m > max_colors) throw std::invalid_argument("MixedGraph: m out of range 0..16");
        if (n < 0 || n > max_colors) throw std::invalid_argument("MixedGraph: n out of range 0..16");
        if (order < 0 || order > SimpleGraph::max_order)
            throw std::invalid_argument("MixedGraph: order out of range 0..64");
        codes_.assign(static_cast<std::size_t>(order) * order, 0);
        masks_.assign(order, 0);
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int order() const { return order_; }
    int p() const { return 2 * m_ + n_; }

    void add_edge(int u, int v, int color) {
        Connection c{std::min(u, v), std::max(u, v), ConnKind::edge, color};
        conns_.push_back(c);
        if (in_vertex_range(u) && in_vertex_range(v) && u != v && color >= 1 && color <= n_ &&
            code(c.u, c.v) == 0)
            install(c.u, c.v, static_cast<type_code>(color));
    }

    // Arc u -> v of the given color.
    void add_arc(int u, int v, int color) {
        Connection c{u, v, ConnKind::arc, color};
        conns_.push_back(c);
        if (in_vertex_range(u) && in_vertex_range(v) && u != v && color >= 1 && color <= m_ &&
            code(u, v) == 0)
            install(u, v, static_cast<type_code>(n_ + color));
    }

    const std::vector<Connection>& connections() const { return conns_; }

    // Type code of the connection between x and y as seen from x (0 if none).
    type_code code(int x, int y) const {
        return codes_[static_cast<std::size_t>(x) * order_ + y];
    }

    bool adjacent(int u, int v) const { return code(u, v) != 0; }

    std::uint64_t neighbors_mask(int v) const { return masks_[v]; }

    int degree(int v) const { return std::popcount(masks_[v]); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
        return d;
    }

private:
    bool in_vertex_range(int v) const { return v >= 0 && v < order_; }

    void install(int x, int y, type_code cx) {
        codes_[static_cast<std::size_t>(x) * order_ + y] = cx;
        codes_[static_cast<std::size_t>(y) * order_ + x] = mirror_code(cx, m_, n_);
        masks_[x] |= std::uint64_t{1} << y;
        masks_[y] |= std::uint64_t{1} << x;
    }

    int m_, n_, order_;
    std::vector<Connection> conns_;
    std::vector<type_code> codes_;
    std::vector<std::uint64_t> masks_;
};

struct Violation {
    std::string message;
    int u = -1, v = -1;
};

// Every invariant violation in the raw connection list. Violations are data,
// not failures: an empty result means the graph is well-formed.
inline std::vector<Violation> validate(const MixedGraph& g) {
    std::vector<Violation> out;
    std::vector<std::pair<int, int>> seen;
    for (const Connection& c : g.connections()) {
        if (c.u < 0 || c.u >= g.order() || c.v < 0 || c.v >= g.order()) {
            out.push_back({"vertex out of range", c.u, c.v});
            continue;
        }
        if (c.u == c.v) {
            out.push_back({"loop", c.u, c.v});
            continue;
        }
        std::pair<int, int> key{std::min(c.u, c.v), std::max(c.u, c.v)};
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            out.push_back({"duplicate pair", key.first, key.second});
        seen.push_back(key);
        if (c.kind == ConnKind::edge) {
            if (g.n() == 0)
                out.push_back({"edges forbidden when n=0", c.u, c.v});
            else if (c.color < 1 || c.color > g.n())
                out.push_back({"edge color out of range", c.u, c.v});
        } else {
            if (g.m() == 0)
                out.push_back({"arcs forbidden when m=0", c.u, c.v});
            else if (c.color < 1 || c.color > g.m())
                out.push_back({"arc color out of range", c.u, c.v});
        }
    }
    return out;
}

// Forgets colors and orientations.
inline SimpleGraph underlying(const MixedGraph& g) {
    SimpleGraph u(g.order());
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y)
            if (g.adjacent(x, y)) u.add_edge(x, y);
    return u;
}

}  // namespace cmg
