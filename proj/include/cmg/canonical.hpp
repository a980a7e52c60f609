#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cmg/io.hpp"
#include "cmg/simple_graph.hpp"

namespace cmg {

namespace detail {

// Iterated degree refinement: colors stabilize so that equal-colored vertices
// have equal multisets of neighbor colors.
inline int refine_colors(const SimpleGraph& g, std::vector<int>& colors) {
    int n = g.order();
    int classes = 0;
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> keyed(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> key{colors[v]};
            std::uint64_t nb = g.neighbors_mask(v);
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                key.push_back(colors[w]);
            }
            std::sort(key.begin() + 1, key.end());
            keyed[v] = {std::move(key), v};
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> fresh(n);
        int next = -1;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) ++next;
            fresh[keyed[i].second] = next;
        }
        bool stable = (next + 1 == classes);
        classes = next + 1;
        colors = std::move(fresh);
        if (stable || classes == n) return classes;
    }
}

inline void canon_search(const SimpleGraph& g, std::vector<int> colors, std::string& best,
                         std::vector<int>& best_labeling, bool& found) {
    int n = g.order();
    int classes = refine_colors(g, colors);
    if (classes == n) {
        SimpleGraph h(n);
        for (auto [u, v] : g.edges()) h.add_edge(colors[u], colors[v]);
        std::string form = write_graph6(h);
        if (!found || form < best) {
            best = form;
            best_labeling = colors;
            found = true;
        }
        return;
    }
    // branch on the lowest non-singleton class
    int target = -1;
    std::vector<int> count(classes, 0);
    for (int v = 0; v < n; ++v) ++count[colors[v]];
    for (int c = 0; c < classes; ++c)
        if (count[c] > 1) {
            target = c;
            break;
        }
    for (int v = 0; v < n; ++v) {
        if (colors[v] != target) continue;
        std::vector<int> split(n);
        for (int u = 0; u < n; ++u) split[u] = colors[u] * 2 + 1;
        split[v] = colors[v] * 2;
        canon_search(g, std::move(split), best, best_labeling, found);
    }
}

}  // namespace detail

// Canonical labeling by refinement plus backtracking; label[v] is the
// position of v in the canonical ordering.
inline std::vector<int> canonical_labeling(const SimpleGraph& g) {
    std::string best;
    std::vector<int> labeling(g.order(), 0);
    bool found = false;
    detail::canon_search(g, std::vector<int>(g.order(), 0), best, labeling, found);
    if (g.order() == 0) return {};
    return labeling;
}

// Canonical form as the graph6 string of the canonically relabeled graph.
inline std::string canonical_form(const SimpleGraph& g) {
    if (g.order() == 0) return write_graph6(g);
    std::vector<int> label = canonical_labeling(g);
    SimpleGraph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(label[u], label[v]);
    return write_graph6(h);
}

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace cmg
