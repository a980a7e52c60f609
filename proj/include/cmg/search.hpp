#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmg/cliques.hpp"
#include "cmg/enumerate.hpp"
#include "cmg/homomorphism.hpp"
#include "cmg/named_graphs.hpp"
#include "cmg/parallel.hpp"
#include "cmg/relations.hpp"
#include "cmg/simple_graph.hpp"

namespace cmg {

struct SearchOutcome {
    int floor = 0;      // colorings are only reported when they beat this
    int best = 0;       // best omega_r found, or floor if nothing beat it
    bool found = false;
    std::optional<MixedGraph> witness;
    bool exhaustive = true;
    std::uint64_t nodes = 0;
    double wall_seconds = 0;
};

namespace detail {

// Adjacency-type code of the leg toward the midpoint, as seen from the
// other endpoint. `letter` is the per-edge assignment (see add_lettered),
// `mid_is_hi` says whether the midpoint is the larger endpoint of the edge.
inline type_code leg_code_toward_mid(int letter, bool mid_is_hi, int m, int n) {
    if (letter < n) return static_cast<type_code>(letter + 1);
    if (letter < n + m) {
        int c = letter - n + 1;
        return static_cast<type_code>(mid_is_hi ? n + c : n + m + c);  // arc lo -> hi
    }
    int c = letter - n - m + 1;
    return static_cast<type_code>(mid_is_hi ? n + m + c : n + c);  // arc hi -> lo
}

struct OmegaRSweep {
    struct PairRec {
        int a, b;
        int undecided = 0;
        int special = 0;
    };
    struct PathRec {
        int pair_id;
        int ea, eb;
        bool mid_is_hi_a, mid_is_hi_b;  // midpoint side within each leg edge
    };

    const SimpleGraph& u;
    int m, n, letters;
    std::vector<std::pair<int, int>> edges;
    std::vector<PairRec> pairs;
    std::vector<PathRec> paths;
    std::vector<std::vector<int>> edge_paths;
    std::vector<int> letter;
    SimpleGraph possible, definite;

    int incumbent;
    std::vector<int> best_letters;
    std::uint64_t nodes = 0, budget;
    bool aborted = false;

    OmegaRSweep(const SimpleGraph& underlying_graph, int m_, int n_, std::uint64_t budget_,
                int floor)
        : u(underlying_graph),
          m(m_),
          n(n_),
          letters(n_ + 2 * m_),
          possible(underlying_graph.order()),
          definite(underlying_graph.order()),
          incumbent(floor),
          budget(budget_) {
        edges = u.edges();
        std::sort(edges.begin(), edges.end(), [](auto a, auto b) {
            return std::pair{a.second, a.first} < std::pair{b.second, b.first};
        });
        letter.assign(edges.size(), -1);
        edge_paths.assign(edges.size(), {});

        std::vector<std::vector<int>> edge_at(
            static_cast<std::size_t>(u.order()) * u.order(), std::vector<int>{});
        auto eidx = [&](int x, int y) -> int {
            for (int i = 0; i < static_cast<int>(edges.size()); ++i)
                if ((edges[i].first == std::min(x, y)) && (edges[i].second == std::max(x, y)))
                    return i;
            return -1;
        };
        for (int a = 0; a < u.order(); ++a) {
            for (int b = a + 1; b < u.order(); ++b) {
                if (u.has_edge(a, b)) {
                    possible.add_edge(a, b);
                    definite.add_edge(a, b);
                    continue;
                }
                std::uint64_t common = u.neighbors_mask(a) & u.neighbors_mask(b);
                if (!common) continue;
                int pid = static_cast<int>(pairs.size());
                pairs.push_back({a, b, std::popcount(common), 0});
                possible.add_edge(a, b);
                while (common) {
                    int mid = std::countr_zero(common);
                    common &= common - 1;
                    int ea = eidx(a, mid), eb = eidx(b, mid);
                    int path_id = static_cast<int>(paths.size());
                    paths.push_back({pid, ea, eb, mid > a, mid > b});
                    edge_paths[ea].push_back(path_id);
                    edge_paths[eb].push_back(path_id);
                }
            }
        }
    }

    // trail entry: (pair_id, became_special)
    using Trail = std::vector<std::pair<int, bool>>;

    bool apply(int e, int val, Trail& trail) {
        letter[e] = val;
        bool died = false;
        for (int path_id : edge_paths[e]) {
            const PathRec& pr = paths[path_id];
            int other = pr.ea == e ? pr.eb : pr.ea;
            if (letter[other] < 0) continue;
            type_code ca = leg_code_toward_mid(letter[pr.ea], pr.mid_is_hi_a, m, n);
            type_code cb = leg_code_toward_mid(letter[pr.eb], pr.mid_is_hi_b, m, n);
            bool sp = ca != cb;
            PairRec& p = pairs[pr.pair_id];
            --p.undecided;
            if (sp) {
                if (++p.special == 1) definite.add_edge(p.a, p.b);
            } else if (p.undecided == 0 && p.special == 0) {
                possible.remove_edge(p.a, p.b);
                died = true;
            }
            trail.emplace_back(pr.pair_id, sp);
        }
        return died;
    }

    void undo(int e, const Trail& trail) {
        letter[e] = -1;
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            PairRec& p = pairs[it->first];
            if (it->second) {
                if (--p.special == 0) definite.remove_edge(p.a, p.b);
            } else {
                if (p.undecided == 0 && p.special == 0) possible.add_edge(p.a, p.b);
            }
            ++p.undecided;
        }
    }

    void dfs(std::size_t e, int ub) {
        if (aborted) return;
        if (e == edges.size()) {
            int val = max_clique(definite);
            if (val > incumbent) {
                incumbent = val;
                best_letters = letter;
            }
            return;
        }
        std::vector<int> choices;
        if (e == 0) {
            choices = first_edge_letters(m, n);
        } else {
            choices.resize(letters);
            for (int i = 0; i < letters; ++i) choices[i] = i;
        }
        for (int val : choices) {
            if (++nodes > budget) {
                aborted = true;
                return;
            }
            Trail trail;
            bool died = apply(static_cast<int>(e), val, trail);
            int new_ub = died ? std::min(ub, max_clique(possible)) : ub;
            if (new_ub > incumbent) dfs(e + 1, new_ub);
            undo(static_cast<int>(e), trail);
            if (aborted) return;
        }
    }
};

}  // namespace detail

// Maximum omega_r over every assignment of an adjacency type (n edge colors
// or m arc colors in either direction) to every edge of U, branch-and-bound
// pruned against the clique number of the still-possible see relation.
// Symmetry-reduced by fixing the first edge up to color permutations and
// global arc reversal. Only colorings beating `floor` are reported; when the
// search is exhaustive and nothing beat it, no coloring of U exceeds floor.
inline SearchOutcome maximize_omega_r(const SimpleGraph& u, int m, int n,
                                      std::uint64_t budget = default_budget, int floor = 0) {
    if (m < 0 || m > max_colors || n < 0 || n > max_colors)
        throw std::invalid_argument("maximize_omega_r: color counts out of range");
    auto start = std::chrono::steady_clock::now();
    SearchOutcome out;
    out.floor = floor;
    out.best = floor;

    if (u.edge_count() == 0) {
        int val = u.order() > 0 ? 1 : 0;
        if (val > floor) {
            out.best = val;
            out.found = true;
            out.witness = MixedGraph(m, n, u.order());
        }
        out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                               .count();
        return out;
    }
    if (n + 2 * m == 0)
        throw std::invalid_argument("maximize_omega_r: no adjacency types (m = n = 0)");

    detail::OmegaRSweep sweep(u, m, n, budget, floor);
    int root_ub = max_clique(sweep.possible);
    if (root_ub > floor) sweep.dfs(0, root_ub);
    out.nodes = sweep.nodes;
    out.exhaustive = !sweep.aborted;
    if (sweep.incumbent > floor) {
        out.found = true;
        out.best = sweep.incumbent;
        MixedGraph g(m, n, u.order());
        for (std::size_t i = 0; i < sweep.edges.size(); ++i)
            detail::add_lettered(g, sweep.edges[i].first, sweep.edges[i].second,
                                 sweep.best_letters[i]);
        out.witness = g;
    }
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

struct EdgeColoring {
    bool colorable = false;
    std::vector<int> colors;  // per edges() position, colors 1..k
};

// Proper k-edge-coloring by exhaustive backtracking (colors canonicalized to
// first-use order, which keeps the search certified while cutting the k!
// relabelings). `colorable == false` is an exhaustive certificate.
inline EdgeColoring edge_color(const SimpleGraph& u, int k) {
    if (k < 1) throw std::invalid_argument("edge_color: k < 1");
    auto edges = u.edges();
    int e = static_cast<int>(edges.size());
    EdgeColoring res;
    std::vector<int> color(e, 0);

    auto conflicts = [&](int i, int c) {
        auto [a, b] = edges[i];
        for (int j = 0; j < i; ++j)
            if (color[j] == c) {
                auto [x, y] = edges[j];
                if (x == a || x == b || y == a || y == b) return true;
            }
        return false;
    };
    auto rec = [&](auto&& self, int i, int used) -> bool {
        if (i == e) return true;
        int top = std::min(k, used + 1);
        for (int c = 1; c <= top; ++c) {
            if (conflicts(i, c)) continue;
            color[i] = c;
            if (self(self, i + 1, std::max(used, c))) return true;
            color[i] = 0;
        }
        return false;
    };
    if (rec(rec, 0, 0)) {
        res.colorable = true;
        res.colors = color;
    }
    return res;
}

// True iff adjacent pairs share no neighbor and every non-adjacent pair has
// exactly one common neighbor.
inline bool unique_two_path_check(const SimpleGraph& u) {
    for (int a = 0; a < u.order(); ++a)
        for (int b = a + 1; b < u.order(); ++b) {
            int common = std::popcount(u.neighbors_mask(a) & u.neighbors_mask(b));
            if (u.has_edge(a, b) ? common != 0 : common != 1) return false;
        }
    return true;
}

// The Wagner graph as a (0,3)-colored graph: chords color 1, rim alternating
// colors 2 and 3. Every pair of vertices sees each other.
inline MixedGraph wagner_construction() {
    MixedGraph g(0, 3, 8);
    for (int i = 0; i < 8; ++i) {
        int j = (i + 1) % 8;
        g.add_edge(std::min(i, j), std::max(i, j), i % 2 == 0 ? 2 : 3);
    }
    for (int i = 0; i < 4; ++i) g.add_edge(i, i + 4, 1);
    return g;
}

// The Petersen graph with a proper 4-edge-coloring, as a (0,n) graph.
inline MixedGraph petersen_colored(int n = 4) {
    if (n < 4) throw std::invalid_argument("petersen_colored: needs n >= 4");
    SimpleGraph p = petersen();
    EdgeColoring col = edge_color(p, 4);
    MixedGraph g(0, n, 10);
    auto edges = p.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        g.add_edge(edges[i].first, edges[i].second, col.colors[i]);
    return g;
}

struct TheoremCase {
    char id = 'a';
    int m = 0, n = 0;
    int claimed = 0;
};

inline TheoremCase theorem41_case(char id) {
    switch (id) {
        case 'a': return {'a', 1, 0, 7};
        case 'b': return {'b', 0, 2, 7};
        case 'c': return {'c', 0, 3, 8};
        case 'd': return {'d', 0, 4, 10};
        case 'e': return {'e', 2, 0, 10};
        case 'f': return {'f', 1, 1, 10};
        default: throw std::invalid_argument("theorem41_case: case must be a..f");
    }
}

struct Thm41Report {
    TheoremCase tcase;
    bool lower_ok = false;
    int lower_value = 0;
    std::optional<MixedGraph> lower_witness;
    std::string lower_method;
    bool upper_ok_on_range = false;
    bool upper_exhaustive = true;
    int upper_cap = 0;
    std::optional<MixedGraph> upper_violation;
    std::string range_note;
    std::uint64_t nodes = 0;
    bool budget_exceeded = false;
};

// Reproduces one case of the subcubic theorem at desk scale. Lower bounds
// are witnessed by an explicit coloring (constructed for c and d, searched
// otherwise); upper bounds are confirmed by sweeping every connected
// subcubic graph up to `order_cap` vertices, which is the honest range such
// a sweep can certify.
inline Thm41Report verify_theorem41(char case_id, std::uint64_t budget = default_budget,
                                    int order_cap = 0, int threads = 1) {
    TheoremCase tc = theorem41_case(case_id);
    Thm41Report rep;
    rep.tcase = tc;
    if (order_cap == 0) order_cap = (case_id == 'a' || case_id == 'b') ? 8 : 10;
    rep.upper_cap = order_cap;

    // lower bound
    if (case_id == 'c') {
        MixedGraph w = wagner_construction();
        OmegaRResult orr = omega_r(w);
        rep.lower_value = orr.value;
        rep.lower_ok = orr.value >= tc.claimed && is_mn_clique(w);
        rep.lower_witness = w;
        rep.lower_method = "wagner construction (chords color 1, rim alternating 2,3)";
    } else if (case_id == 'd') {
        MixedGraph p = petersen_colored(tc.n);
        OmegaRResult orr = omega_r(p);
        OmegaAResult oa = omega_a(p);
        rep.lower_value = orr.value;
        rep.lower_ok = orr.value == tc.claimed && oa.value == tc.claimed;
        rep.lower_witness = p;
        rep.lower_method = "petersen with a proper 4-edge-coloring";
    } else if (case_id == 'e' || case_id == 'f') {
        SearchOutcome so = maximize_omega_r(petersen(), tc.m, tc.n, budget, tc.claimed - 1);
        rep.nodes += so.nodes;
        rep.budget_exceeded |= !so.exhaustive;
        rep.lower_value = so.found ? so.best : 0;
        rep.lower_ok = so.found && so.best >= tc.claimed;
        rep.lower_witness = so.witness;
        rep.lower_method = "search over petersen colorings";
    } else {  // a, b: search small subcubic graphs
        for (const SimpleGraph& g : enumerate_subcubic(std::min(order_cap, tc.claimed))) {
            if (g.order() < tc.claimed) continue;
            SearchOutcome so = maximize_omega_r(g, tc.m, tc.n, budget, tc.claimed - 1);
            rep.nodes += so.nodes;
            rep.budget_exceeded |= !so.exhaustive;
            if (so.found) {
                rep.lower_value = so.best;
                rep.lower_ok = so.best >= tc.claimed;
                rep.lower_witness = so.witness;
                rep.lower_method = "search over connected subcubic graphs";
                break;
            }
        }
    }

    // upper bound on the swept range: nothing may beat the claimed value
    std::vector<SimpleGraph> sweep;
    for (const SimpleGraph& g : enumerate_subcubic(order_cap))
        if (g.order() > tc.claimed) sweep.push_back(g);

    std::vector<SearchOutcome> outs(sweep.size());
    parallel_for(static_cast<int>(sweep.size()), threads, [&](int i) {
        outs[i] = maximize_omega_r(sweep[i], tc.m, tc.n, budget, tc.claimed);
    });
    rep.upper_ok_on_range = true;
    for (std::size_t i = 0; i < outs.size(); ++i) {
        rep.nodes += outs[i].nodes;
        rep.upper_exhaustive &= outs[i].exhaustive;
        rep.budget_exceeded |= !outs[i].exhaustive;
        if (outs[i].found) {
            rep.upper_ok_on_range = false;
            if (!rep.upper_violation) rep.upper_violation = outs[i].witness;
        }
    }
    rep.range_note = "upper bound confirmed over all connected subcubic graphs on <= " +
                     std::to_string(order_cap) + " vertices" +
                     (tc.claimed >= order_cap
                          ? " (vacuous at this cap: omega_r cannot exceed the order)"
                          : "") +
                     "; the theorem's full upper bound is a counting argument beyond sweeps";
    if (case_id == 'b') {
        SearchOutcome cub = maximize_omega_r(cubical(), 0, 2, budget, 0);
        SearchOutcome wag = maximize_omega_r(wagner(), 0, 2, budget, 0);
        rep.nodes += cub.nodes + wag.nodes;
        rep.upper_ok_on_range &= cub.best <= tc.claimed && wag.best <= tc.claimed;
        rep.range_note += "; exact (0,2) maxima: cubical " + std::to_string(cub.best) +
                          ", wagner " + std::to_string(wag.best);
    }
    return rep;
}

}  // namespace cmg
