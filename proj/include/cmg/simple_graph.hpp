#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cmg {

// Undirected simple graph on at most 64 vertices, adjacency kept as one
// 64-bit row per vertex so neighborhood intersections are single AND ops.
class SimpleGraph {
public:
    static constexpr int max_order = 64;

    SimpleGraph() = default;

    explicit SimpleGraph(int order) : order_(order) {
        if (order < 0 || order > max_order)
            throw std::invalid_argument("SimpleGraph: order out of range 0..64");
    }

    int order() const { return order_; }
    int edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && (adj_[u] >> v & 1u);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("SimpleGraph: loop");
        if (adj_[u] >> v & 1u) return;
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
        ++edge_count_;
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) return;
        adj_[u] &= ~(std::uint64_t{1} << v);
        adj_[v] &= ~(std::uint64_t{1} << u);
        --edge_count_;
    }

    std::uint64_t neighbors_mask(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return std::popcount(neighbors_mask(v)); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
        return d;
    }

    // Edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count_);
        for (int u = 0; u < order_; ++u) {
            std::uint64_t rest = adj_[u] >> (u + 1) << (u + 1);
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                out.emplace_back(u, v);
            }
        }
        return out;
    }

    bool connected() const {
        if (order_ <= 1) return true;
        std::uint64_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[v];
            }
            frontier = next & ~seen;
            seen |= next;
        }
        return std::popcount(seen) == order_;
    }

    bool is_regular(int k) const {
        for (int v = 0; v < order_; ++v)
            if (degree(v) != k) return false;
        return true;
    }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        if (a.order_ != b.order_ || a.edge_count_ != b.edge_count_) return false;
        for (int v = 0; v < a.order_; ++v)
            if (a.adj_[v] != b.adj_[v]) return false;
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order_)
            throw std::out_of_range("SimpleGraph: vertex out of range");
    }

    int order_ = 0;
    int edge_count_ = 0;
    std::array<std::uint64_t, max_order> adj_{};
};

// BFS distances from src; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const SimpleGraph& g, int src) {
    std::vector<int> dist(g.order(), -1);
    dist[src] = 0;
    std::vector<int> queue{src};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        std::uint64_t nb = g.neighbors_mask(u);
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

// Length of a shortest cycle, or -1 for forests.
inline int girth(const SimpleGraph& g) {
    int best = -1;
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
        dist[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            std::uint64_t nb = g.neighbors_mask(u);
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    int cyc = dist[u] + dist[v] + 1;
                    if (best < 0 || cyc < best) best = cyc;
                }
            }
        }
    }
    return best;
}

}  // namespace cmg
