#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmg/canonical.hpp"
#include "cmg/simple_graph.hpp"

namespace cmg {

namespace detail {

inline SimpleGraph with_new_vertex(const SimpleGraph& g, const std::vector<int>& attach) {
    SimpleGraph h(g.order() + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int a : attach) h.add_edge(a, g.order());
    return h;
}

}  // namespace detail

// One representative per isomorphism class of connected graphs with maximum
// degree <= 3 and order <= nmax, grown level by level: every connected graph
// has a vertex whose removal keeps it connected (a spanning-tree leaf), so
// attaching a new vertex to 1..3 vertices of degree <= 2 reaches every class.
// Output is sorted by (order, canonical form).
inline std::vector<SimpleGraph> enumerate_subcubic(int nmax) {
    if (nmax < 1 || nmax > 10)
        throw std::invalid_argument("enumerate_subcubic: nmax out of range 1..10");
    std::vector<SimpleGraph> out;
    std::map<std::string, SimpleGraph> level;
    SimpleGraph single(1);
    level.emplace(canonical_form(single), single);
    out.push_back(single);
    for (int k = 2; k <= nmax; ++k) {
        std::map<std::string, SimpleGraph> next;
        for (const auto& [form, g] : level) {
            std::vector<int> open;
            for (int v = 0; v < g.order(); ++v)
                if (g.degree(v) <= 2) open.push_back(v);
            int e = static_cast<int>(open.size());
            auto emit = [&](const std::vector<int>& attach) {
                SimpleGraph h = detail::with_new_vertex(g, attach);
                next.try_emplace(canonical_form(h), h);
            };
            for (int i = 0; i < e; ++i) {
                emit({open[i]});
                for (int j = i + 1; j < e; ++j) {
                    emit({open[i], open[j]});
                    for (int l = j + 1; l < e; ++l) emit({open[i], open[j], open[l]});
                }
            }
        }
        for (const auto& [form, g] : next) out.push_back(g);
        level = std::move(next);
    }
    return out;
}

// One representative per isomorphism class of trees with order <= nmax,
// grown by leaf attachment. Sorted by (order, canonical form).
inline std::vector<SimpleGraph> enumerate_trees(int nmax) {
    if (nmax < 1 || nmax > 10)
        throw std::invalid_argument("enumerate_trees: nmax out of range 1..10");
    std::vector<SimpleGraph> out;
    std::map<std::string, SimpleGraph> level;
    SimpleGraph single(1);
    level.emplace(canonical_form(single), single);
    out.push_back(single);
    for (int k = 2; k <= nmax; ++k) {
        std::map<std::string, SimpleGraph> next;
        for (const auto& [form, g] : level)
            for (int v = 0; v < g.order(); ++v) {
                SimpleGraph h = detail::with_new_vertex(g, {v});
                next.try_emplace(canonical_form(h), h);
            }
        for (const auto& [form, g] : next) out.push_back(g);
        level = std::move(next);
    }
    return out;
}

}  // namespace cmg
