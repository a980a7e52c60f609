#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cmg/simple_graph.hpp"

namespace cmg {

// Canonical numberings are fixed so witnesses are reproducible across runs:
//   petersen  outer cycle 0..4, inner pentagram 5..9, spokes {i, i+5}
//   wagner    cycle 0..7 plus chords {i, i+4}
//   cubical   Q3, vertex i adjacent to i^1, i^2, i^4

inline SimpleGraph petersen() {
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    return g;
}

inline SimpleGraph wagner() {
    SimpleGraph g(8);
    for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
    for (int i = 0; i < 4; ++i) g.add_edge(i, i + 4);
    return g;
}

inline SimpleGraph cubical() {
    SimpleGraph g(8);
    for (int i = 0; i < 8; ++i)
        for (int b : {1, 2, 4})
            if (i < (i ^ b)) g.add_edge(i, i ^ b);
    return g;
}

inline SimpleGraph path_graph(int k) {
    if (k < 1 || k > SimpleGraph::max_order) throw std::invalid_argument("path: k out of range");
    SimpleGraph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

inline SimpleGraph cycle_graph(int k) {
    if (k < 3 || k > SimpleGraph::max_order) throw std::invalid_argument("cycle: k out of range");
    SimpleGraph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

inline SimpleGraph complete_graph(int k) {
    if (k < 1 || k > SimpleGraph::max_order) throw std::invalid_argument("complete: k out of range");
    SimpleGraph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

// K_{1,k}: center 0, leaves 1..k.
inline SimpleGraph star_graph(int k) {
    if (k < 1 || k >= SimpleGraph::max_order) throw std::invalid_argument("star: k out of range");
    SimpleGraph g(k + 1);
    for (int i = 1; i <= k; ++i) g.add_edge(0, i);
    return g;
}

// Accepts "petersen", "wagner", "cubical", and the parameterized forms
// "path(k)", "cycle(k)", "complete(k)", "star(k)".
inline SimpleGraph named_graph(std::string_view name) {
    if (name == "petersen") return petersen();
    if (name == "wagner") return wagner();
    if (name == "cubical") return cubical();
    auto open = name.find('(');
    if (open != std::string_view::npos && name.back() == ')') {
        std::string_view base = name.substr(0, open);
        std::string arg(name.substr(open + 1, name.size() - open - 2));
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
        } catch (const std::exception&) {
            throw std::invalid_argument("named_graph: bad parameter in '" + std::string(name) + "'");
        }
        if (base == "path") return path_graph(k);
        if (base == "cycle") return cycle_graph(k);
        if (base == "complete") return complete_graph(k);
        if (base == "star") return star_graph(k);
    }
    throw std::invalid_argument("named_graph: unknown name '" + std::string(name) + "'");
}

inline bool is_named_graph(std::string_view name) {
    try {
        named_graph(name);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace cmg
