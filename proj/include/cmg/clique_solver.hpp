#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "cmg/simple_graph.hpp"

namespace cmg {

namespace detail {

// Greedy coloring of the candidate set; emits vertices in color order with
// their color number as an upper bound on the clique extension size.
inline void color_sort(const SimpleGraph& g, std::uint64_t cand, std::vector<int>& order,
                       std::vector<int>& bound) {
    order.clear();
    bound.clear();
    std::uint64_t rest = cand;
    int color = 0;
    while (rest) {
        ++color;
        std::uint64_t avail = rest;
        while (avail) {
            int v = std::countr_zero(avail);
            avail &= avail - 1;
            avail &= ~g.neighbors_mask(v);
            rest &= ~(std::uint64_t{1} << v);
            order.push_back(v);
            bound.push_back(color);
        }
    }
}

struct MaxCliqueSearch {
    const SimpleGraph& g;
    int best = 0;
    std::vector<int> best_set;
    std::vector<int> current;

    explicit MaxCliqueSearch(const SimpleGraph& graph) : g(graph) {}

    void expand(std::uint64_t cand) {
        std::vector<int> order, bound;
        color_sort(g, cand, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current.size()) + bound[i] <= best) return;
            int v = order[i];
            current.push_back(v);
            std::uint64_t next = cand & g.neighbors_mask(v);
            if (next == 0) {
                if (static_cast<int>(current.size()) > best) {
                    best = static_cast<int>(current.size());
                    best_set = current;
                }
            } else {
                expand(next);
            }
            current.pop_back();
            cand &= ~(std::uint64_t{1} << v);
        }
    }
};

// Is there a clique of size `need` inside `cand`?
inline bool clique_decision(const SimpleGraph& g, std::uint64_t cand, int need) {
    if (need <= 0) return true;
    if (std::popcount(cand) < need) return false;
    std::vector<int> order, bound;
    color_sort(g, cand, order, bound);
    if (bound.empty() || bound.back() < need) return false;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        if (bound[i] < need) return false;
        int v = order[i];
        if (clique_decision(g, cand & g.neighbors_mask(v), need - 1)) return true;
        cand &= ~(std::uint64_t{1} << v);
    }
    return false;
}

}  // namespace detail

inline std::uint64_t all_vertices_mask(const SimpleGraph& g) {
    return g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
}

// Exact clique number; `witness` (if given) receives some maximum clique.
inline int max_clique(const SimpleGraph& g, std::vector<int>* witness = nullptr) {
    detail::MaxCliqueSearch search(g);
    if (g.order() > 0) search.expand(all_vertices_mask(g));
    if (witness) *witness = search.best_set;
    return search.best;
}

// The maximum clique whose ascending vertex list is lexicographically
// smallest, built by prefix forcing with decision searches.
inline std::vector<int> lex_smallest_max_clique(const SimpleGraph& g) {
    int k = max_clique(g);
    std::vector<int> chosen;
    std::uint64_t cand = all_vertices_mask(g);
    for (int need = k; need > 0; --need) {
        std::uint64_t scan = cand;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint64_t above = v == 63 ? 0 : ~std::uint64_t{0} << (v + 1);
            std::uint64_t next = cand & g.neighbors_mask(v) & above;
            if (detail::clique_decision(g, next, need - 1)) {
                chosen.push_back(v);
                cand = next;
                break;
            }
        }
    }
    return chosen;
}

// Enumerates cliques of exactly `size` in ascending lexicographic order and
// returns the first one accepted by `pred`; empty if none (or if the node
// budget ran out, reported via `exhausted`).
template <class Pred>
std::vector<int> first_clique_such_that(const SimpleGraph& g, int size, Pred&& pred,
                                        std::uint64_t& budget, bool& exhausted) {
    std::vector<int> current;
    std::vector<int> result;
    auto rec = [&](auto&& self, std::uint64_t cand, int need) -> bool {
        if (budget == 0) {
            exhausted = true;
            return false;
        }
        --budget;
        if (need == 0) {
            if (pred(current)) {
                result = current;
                return true;
            }
            return false;
        }
        if (std::popcount(cand) < need) return false;
        {
            std::vector<int> order, bound;
            detail::color_sort(g, cand, order, bound);
            if (bound.empty() || bound.back() < need) return false;
        }
        std::uint64_t scan = cand;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint64_t above = v == 63 ? 0 : ~std::uint64_t{0} << (v + 1);
            current.push_back(v);
            if (self(self, cand & g.neighbors_mask(v) & above, need - 1)) return true;
            current.pop_back();
            if (exhausted) return false;
        }
        return false;
    };
    if (size == 0) return result;
    rec(rec, all_vertices_mask(g), size);
    return result;
}

}  // namespace cmg
