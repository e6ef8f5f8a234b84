// Transition edges and transition spaces of proper colorings.
//
// An edge (x,y) is a transition edge of K when swapping the endpoint colors
// leaves the coloring proper; equivalently x is the only neighbor of y colored
// K(x) and vice versa.  For q=2 the transition space may be *generated*:
// T(K) = {(x, x+b) : b in B} for some B inside the connection set, detected
// here via the forced candidate B = T_0(K).
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coloring.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace hamgraph {

using Edge = std::pair<Vertex, Vertex>; // stored smaller endpoint first

struct TransitionSpace {
    std::vector<Edge> edges;                    // sorted, u < v
    std::vector<std::vector<Vertex>> per_vertex; // T_x(K), ascending
    std::optional<std::vector<Vertex>> generator; // B with T(K) = <B>, q=2 only
};

struct RobustnessReport {
    std::uint64_t transition_edge_count = 0;
    std::uint64_t edge_count = 0;
    Rational robustness;
};

namespace detail {

// Remark criterion, no precondition checks: x must be the only neighbor of y
// with color K(x) and y the only neighbor of x with color K(y).
inline bool transition_edge_kernel(const HammingGraph& g, const Coloring& k, Vertex x, Vertex y) {
    for (Vertex s : g.generators()) {
        Vertex z = add(g.params(), y, s);
        if (z != x && k.color(z) == k.color(x)) return false;
    }
    for (Vertex s : g.generators()) {
        Vertex z = add(g.params(), x, s);
        if (z != y && k.color(z) == k.color(y)) return false;
    }
    return true;
}

inline void require_edge(const HammingGraph& g, Vertex x, Vertex y) {
    if (!g.is_edge(x, y)) throw validation_error("(x,y) is not an edge of the graph");
}

inline void require_proper(const HammingGraph& g, const Coloring& k) {
    if (!is_proper(g, k)) throw validation_error("coloring is not proper");
}

} // namespace detail

// Neighbor-scan route (the primary implementation).
inline bool is_transition_edge(const HammingGraph& g, const Coloring& k, Vertex x, Vertex y) {
    detail::require_edge(g, x, y);
    detail::require_proper(g, k);
    return detail::transition_edge_kernel(g, k, x, y);
}

// Swap route: literally swap the endpoint colors and test properness.
// Must agree with is_transition_edge on every edge; kept as an independent
// cross-check, not used by the bulk scan.
inline bool is_transition_edge_via_swap(const HammingGraph& g, const Coloring& k, Vertex x, Vertex y) {
    detail::require_edge(g, x, y);
    detail::require_proper(g, k);
    return is_proper(g, swap_along_edge(g, k, x, y));
}

// Candidate generator B = T_0(K); accepted iff T_x(K) = x + B for every x.
inline std::optional<std::vector<Vertex>> generator_from(const HammingGraph& g,
                                                         const TransitionSpace& space) {
    if (g.params().q != 2)
        throw validation_error("generated transition spaces are defined for q = 2 only");
    const auto& b = space.per_vertex[0];
    if (b.empty()) return std::nullopt;
    std::vector<Vertex> shifted;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        shifted.clear();
        for (Vertex v : b) shifted.push_back(x ^ v);
        std::sort(shifted.begin(), shifted.end());
        if (shifted != space.per_vertex[static_cast<std::size_t>(x)]) return std::nullopt;
    }
    return b;
}

inline TransitionSpace transition_space(const HammingGraph& g, const Coloring& k) {
    detail::require_proper(g, k);
    TransitionSpace space;
    space.per_vertex.assign(static_cast<std::size_t>(g.vertex_count()), {});
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (Vertex y : g.neighbors(x)) {
            if (x >= y) continue;
            if (detail::transition_edge_kernel(g, k, x, y)) {
                space.edges.emplace_back(x, y);
                space.per_vertex[static_cast<std::size_t>(x)].push_back(y);
                space.per_vertex[static_cast<std::size_t>(y)].push_back(x);
            }
        }
    for (auto& tx : space.per_vertex) std::sort(tx.begin(), tx.end());
    if (g.params().q == 2) space.generator = generator_from(g, space);
    return space;
}

inline RobustnessReport robustness(const HammingGraph& g, const TransitionSpace& space) {
    RobustnessReport report;
    report.transition_edge_count = space.edges.size();
    report.edge_count = g.edge_count();
    report.robustness = Rational(static_cast<std::int64_t>(report.transition_edge_count),
                                 static_cast<std::int64_t>(report.edge_count));
    return report;
}

inline RobustnessReport robustness(const HammingGraph& g, const Coloring& k) {
    return robustness(g, transition_space(g, k));
}

inline std::optional<std::vector<Vertex>> generator_set(const HammingGraph& g, const Coloring& k) {
    if (g.params().q != 2)
        throw validation_error("generated transition spaces are defined for q = 2 only");
    return transition_space(g, k).generator;
}

// True iff M decomposes into vertex-disjoint 4-cycles covering every vertex:
// every vertex has M-degree 2 and every component is a 4-cycle.
inline bool tiles_in_4cycles(const HammingGraph& g, const std::vector<Edge>& m) {
    const auto v = g.vertex_count();
    if (v % 4 != 0) return false;
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(v));
    for (const auto& [a, b] : m) {
        detail::require_edge(g, a, b);
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (const auto& row : adj)
        if (row.size() != 2) return false;
    std::vector<char> seen(static_cast<std::size_t>(v), 0);
    std::uint64_t components = 0;
    for (Vertex start = 0; start < v; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        // walk the cycle through `start`; it must close after exactly 4 steps
        Vertex prev = start;
        Vertex cur = adj[static_cast<std::size_t>(start)][0];
        seen[static_cast<std::size_t>(start)] = 1;
        int len = 1;
        while (cur != start) {
            if (seen[static_cast<std::size_t>(cur)]) return false;
            seen[static_cast<std::size_t>(cur)] = 1;
            const auto& row = adj[static_cast<std::size_t>(cur)];
            Vertex next = (row[0] == prev) ? row[1] : row[0];
            prev = cur;
            cur = next;
            if (++len > 4) return false;
        }
        if (len != 4) return false;
        ++components;
    }
    return components == v / 4;
}

namespace detail {

inline void require_h2n_nm1_4coloring(const HammingGraph& g, const Coloring& k) {
    const auto& p = g.params();
    if (p.q != 2 || p.d != p.n - 1 || p.n < 3)
        throw validation_error("operation requires H_2(n,n-1) with n >= 3");
    require_proper(g, k);
    if (k.used_colors() > 4) throw validation_error("operation requires a 4-coloring");
}

} // namespace detail

struct MaxRobustCheck {
    bool two_element_generator = false; // T(K) = <v,w> with v,w in N(0)
    bool robustness_maximal = false;    // rb(K) = 2/(n+1)
    bool tiles = false;                 // transition edges tile the graph in 4-cycles

    bool all() const { return two_element_generator && robustness_maximal && tiles; }
    bool agree() const {
        return two_element_generator == robustness_maximal && robustness_maximal == tiles;
    }
};

// The three equivalent characterizations of maximal robustness for
// 4-colorings of H_2(n,n-1); they must agree on every input.
inline MaxRobustCheck max_robust_check(const HammingGraph& g, const Coloring& k) {
    detail::require_h2n_nm1_4coloring(g, k);
    auto space = transition_space(g, k);
    MaxRobustCheck out;
    out.two_element_generator = space.generator.has_value() && space.generator->size() == 2;
    out.robustness_maximal =
        robustness(g, space).robustness == Rational(2, static_cast<std::int64_t>(g.params().n) + 1);
    out.tiles = tiles_in_4cycles(g, space.edges);
    return out;
}

// max_x |T_x(K)|; at most 2 for any proper 4-coloring of H_2(n,n-1).
inline std::size_t transition_degree_bound(const HammingGraph& g, const Coloring& k) {
    detail::require_h2n_nm1_4coloring(g, k);
    auto space = transition_space(g, k);
    std::size_t best = 0;
    for (const auto& tx : space.per_vertex) best = std::max(best, tx.size());
    return best;
}

// Longest simple open path (edge count) inside the transition subgraph.
inline std::size_t max_transition_path_length(const HammingGraph& g, const Coloring& k) {
    detail::require_h2n_nm1_4coloring(g, k);
    auto space = transition_space(g, k);
    // |T_x| <= 2, so components are simple paths or cycles; either way the
    // longest simple open path visits the whole component.
    for (const auto& tx : space.per_vertex)
        if (tx.size() > 2)
            throw std::logic_error("transition degree above 2 on H_2(n,n-1): bug");
    std::size_t best = 0;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::size_t size = 0;
        std::vector<Vertex> stack{start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            ++size;
            for (Vertex y : space.per_vertex[static_cast<std::size_t>(x)])
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    stack.push_back(y);
                }
        }
        best = std::max(best, size - 1);
    }
    return best;
}

// x1+x2 = x3+x4 for any 4-cycle x1..x4 (binary graphs with d = n-1).
inline bool four_cycle_sum_check(const HammingGraph& g, const std::array<Vertex, 4>& cycle) {
    if (g.params().q != 2) throw validation_error("four-cycle sum check is defined for q = 2 only");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (cycle[static_cast<std::size_t>(i)] == cycle[static_cast<std::size_t>(j)])
                throw validation_error("the four vertices of a 4-cycle must be distinct");
    for (int i = 0; i < 4; ++i)
        detail::require_edge(g, cycle[static_cast<std::size_t>(i)],
                             cycle[static_cast<std::size_t>((i + 1) % 4)]);
    return (cycle[0] ^ cycle[1]) == (cycle[2] ^ cycle[3]);
}

// --- reconstruction from a single transition 4-cycle ------------------------

struct PropagationResult {
    std::optional<Coloring> coloring;   // set on success
    std::optional<Vertex> conflict;     // first conflicting vertex otherwise

    bool ok() const { return coloring.has_value(); }
};

// Rebuild the unique 4-coloring whose transition space would be <v,w>, by
// shifting the seed 4-cycle (0, v, v+w, w) across the graph in BFS order:
// a neighbor y = u + s of a colored coset inherits
//   K(y) = K(u+z), K(y+v) = K(u+w), K(y+z) = K(u), K(y+w) = K(u+v),
// where z = v+w.  The first disagreement aborts with that vertex.
inline PropagationResult propagate_from_cycle(const HammingGraph& g, Vertex v, Vertex w,
                                              const std::array<std::uint32_t, 4>& seed = {0, 1, 2, 3}) {
    const auto& p = g.params();
    if (p.q != 2 || p.d != p.n - 1)
        throw validation_error("cycle propagation requires H_2(n,n-1)");
    if (v == w || v == 0 || w == 0 || weight(p, v) < p.d || weight(p, w) < p.d)
        throw validation_error("v and w must be distinct neighbors of 0");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (seed[static_cast<std::size_t>(i)] == seed[static_cast<std::size_t>(j)])
                throw validation_error("seed colors must be distinct");
    for (auto c : seed)
        if (c >= 4) throw validation_error("seed colors must lie in [0,4)");

    const Vertex z = v ^ w;
    const std::uint64_t vc = g.vertex_count();
    constexpr std::uint32_t unset = UINT32_MAX;
    std::vector<std::uint32_t> colors(static_cast<std::size_t>(vc), unset);
    colors[0] = seed[0];
    colors[static_cast<std::size_t>(v)] = seed[1];
    colors[static_cast<std::size_t>(z)] = seed[2];
    colors[static_cast<std::size_t>(w)] = seed[3];

    std::deque<Vertex> queue{0}; // coset representatives, all four members colored
    std::vector<char> enqueued(static_cast<std::size_t>(vc), 0);
    enqueued[0] = 1;
    while (!queue.empty()) {
        Vertex base = queue.front();
        queue.pop_front();
        std::array<Vertex, 4> members{base, base ^ v, base ^ z, base ^ w};
        std::sort(members.begin(), members.end());
        for (Vertex u : members) {
            for (Vertex s : g.generators()) {
                if (s == v || s == w || s == z) continue; // stays inside the coset
                Vertex y = u ^ s;
                std::array<Vertex, 4> target{y, y ^ v, y ^ z, y ^ w};
                std::array<std::uint32_t, 4> implied{colors[static_cast<std::size_t>(u ^ z)],
                                                     colors[static_cast<std::size_t>(u ^ w)],
                                                     colors[static_cast<std::size_t>(u)],
                                                     colors[static_cast<std::size_t>(u ^ v)]};
                if (colors[static_cast<std::size_t>(y)] == unset) {
                    for (int i = 0; i < 4; ++i)
                        colors[static_cast<std::size_t>(target[static_cast<std::size_t>(i)])] =
                            implied[static_cast<std::size_t>(i)];
                    Vertex rep = *std::min_element(target.begin(), target.end());
                    if (!enqueued[static_cast<std::size_t>(rep)]) {
                        enqueued[static_cast<std::size_t>(rep)] = 1;
                        queue.push_back(rep);
                    }
                } else {
                    for (int i = 0; i < 4; ++i)
                        if (colors[static_cast<std::size_t>(target[static_cast<std::size_t>(i)])] !=
                            implied[static_cast<std::size_t>(i)])
                            return PropagationResult{std::nullopt, target[static_cast<std::size_t>(i)]};
                }
            }
        }
    }

    Coloring result{p, 4, std::move(colors)};
    // the shift rules force properness; guard against it all the same
    for (Vertex x = 0; x < vc; ++x)
        for (Vertex s : g.generators()) {
            Vertex y = x ^ s;
            if (x < y && result.color(x) == result.color(y))
                return PropagationResult{std::nullopt, y};
        }
    return PropagationResult{std::move(result), std::nullopt};
}

// --- JSON wire format --------------------------------------------------------
// {"edges":[[u,v],...] sorted, "generator":[indices]|null, "robustness":"p/q"}

inline nlohmann::json transition_space_to_json(const HammingGraph& g, const TransitionSpace& space) {
    nlohmann::json j;
    auto edges = nlohmann::json::array();
    for (const auto& [a, b] : space.edges) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    if (space.generator)
        j["generator"] = *space.generator;
    else
        j["generator"] = nullptr;
    j["robustness"] = robustness(g, space).robustness.str();
    return j;
}

} // namespace hamgraph
