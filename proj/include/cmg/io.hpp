#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cmg/mixed_graph.hpp"
#include "cmg/simple_graph.hpp"

namespace cmg {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t sp = line.find(' ', pos);
        if (sp == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, sp - pos));
        pos = sp + 1;
    }
}

inline int parse_int(std::string_view tok, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw parse_error(std::string("mng: bad integer in ") + what);
    return value;
}

}  // namespace detail

// .mng text format:
//   mng <m> <n> <order>
//   e <u> <v> <c>     edge, u < v
//   a <u> <v> <c>     arc u -> v
// ASCII, LF line endings, single spaces, records sorted by (min, max) endpoint.
inline MixedGraph parse_mng(std::string_view text) {
    if (text.find('\r') != std::string_view::npos)
        throw parse_error("mng: CR line endings not allowed");
    auto lines = detail::split_lines(text);
    if (lines.empty()) throw parse_error("mng: empty input");

    auto header = detail::split_fields(lines[0]);
    if (header.size() != 4 || header[0] != "mng")
        throw parse_error("mng: malformed header");
    int m = detail::parse_int(header[1], "header");
    int n = detail::parse_int(header[2], "header");
    int order = detail::parse_int(header[3], "header");
    if (m < 0 || m > max_colors || n < 0 || n > max_colors)
        throw parse_error("mng: color count out of range");
    if (order < 0 || order > SimpleGraph::max_order)
        throw parse_error("mng: order out of range");

    MixedGraph g(m, n, order);
    std::vector<std::pair<int, int>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) {
            if (i + 1 != lines.size()) throw parse_error("mng: blank line");
            break;
        }
        auto f = detail::split_fields(lines[i]);
        if (f.size() != 4 || (f[0] != "e" && f[0] != "a"))
            throw parse_error("mng: malformed record line");
        int u = detail::parse_int(f[1], "record");
        int v = detail::parse_int(f[2], "record");
        int c = detail::parse_int(f[3], "record");
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw parse_error("mng: vertex out of range");
        if (u == v) throw parse_error("mng: loop");
        std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        for (const auto& k : seen)
            if (k == key) throw parse_error("mng: duplicate pair");
        seen.push_back(key);
        if (f[0] == "e") {
            if (u >= v) throw parse_error("mng: edge endpoints not ascending");
            if (c < 1 || c > n) throw parse_error("mng: edge color out of range");
            g.add_edge(u, v, c);
        } else {
            if (c < 1 || c > m) throw parse_error("mng: arc color out of range");
            g.add_arc(u, v, c);
        }
    }
    return g;
}

inline std::string serialize_mng(const MixedGraph& g) {
    std::vector<Connection> conns = g.connections();
    std::sort(conns.begin(), conns.end(), [](const Connection& a, const Connection& b) {
        auto ka = std::pair{std::min(a.u, a.v), std::max(a.u, a.v)};
        auto kb = std::pair{std::min(b.u, b.v), std::max(b.u, b.v)};
        return ka < kb;
    });
    std::string out = "mng " + std::to_string(g.m()) + ' ' + std::to_string(g.n()) + ' ' +
                      std::to_string(g.order()) + '\n';
    for (const Connection& c : conns) {
        out += c.kind == ConnKind::edge ? 'e' : 'a';
        out += ' ';
        out += std::to_string(c.u);
        out += ' ';
        out += std::to_string(c.v);
        out += ' ';
        out += std::to_string(c.color);
        out += '\n';
    }
    return out;
}

// Standard graph6, orders 0..62 (single-byte length only).
inline SimpleGraph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw parse_error("graph6: empty line");
    unsigned char first = static_cast<unsigned char>(line[0]);
    if (first == 126) throw parse_error("graph6: orders above 62 not supported");
    if (first < 63 || first > 63 + 62) throw parse_error("graph6: bad order byte");
    int order = first - 63;
    int nbits = order * (order - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + nbytes)
        throw parse_error("graph6: bad length");

    SimpleGraph g(order);
    int bit = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char byte = static_cast<unsigned char>(line[1 + bit / 6]);
            if (byte < 63 || byte > 126) throw parse_error("graph6: bad data byte");
            if ((byte - 63) >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    }
    // padding bits must be zero
    for (; bit < nbytes * 6; ++bit) {
        unsigned char byte = static_cast<unsigned char>(line[1 + bit / 6]);
        if ((byte - 63) >> (5 - bit % 6) & 1) throw parse_error("graph6: nonzero padding");
    }
    return g;
}

inline std::string write_graph6(const SimpleGraph& g) {
    if (g.order() > 62) throw std::invalid_argument("graph6: orders above 62 not supported");
    std::string out;
    out.push_back(static_cast<char>(g.order() + 63));
    int acc = 0, used = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = used = 0;
            }
        }
    }
    if (used) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

enum class InputKind { mng, graph6 };

inline InputKind detect_format(std::string_view text) {
    return text.substr(0, 4) == "mng " ? InputKind::mng : InputKind::graph6;
}

// Loads either format as a mixed graph; graph6 input is promoted to the
// (0,1) graph with every edge colored 1.
inline MixedGraph load_mixed(std::string_view text) {
    if (detect_format(text) == InputKind::mng) return parse_mng(text);
    SimpleGraph s = parse_graph6(text);
    MixedGraph g(0, 1, s.order());
    for (auto [u, v] : s.edges()) g.add_edge(u, v, 1);
    return g;
}

// Loads either format as a simple graph; mng input is stripped to U(G).
inline SimpleGraph load_simple(std::string_view text) {
    if (detect_format(text) == InputKind::graph6) return parse_graph6(text);
    return underlying(parse_mng(text));
}

}  // namespace cmg
