// Colorings as total vertex -> color maps plus their canonical partition form.
//
// Colors are dense integers in [0,k).  Two colorings are compared through
// their canonical partitions (classes keyed by least member), which quotients
// out palette naming but not graph automorphisms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "graph.hpp"

namespace hamgraph {

struct Coloring {
    GraphParams params;
    std::uint32_t k = 0;                // declared palette size
    std::vector<std::uint32_t> colors;  // one entry per vertex, canonical index order

    std::uint32_t color(Vertex x) const { return colors[static_cast<std::size_t>(x)]; }

    std::uint32_t used_colors() const {
        std::vector<char> seen(k, 0);
        std::uint32_t used = 0;
        for (auto c : colors)
            if (!seen[c]) {
                seen[c] = 1;
                ++used;
            }
        return used;
    }
};

inline Coloring make_coloring(const GraphParams& params, std::uint32_t k,
                              std::vector<std::uint32_t> colors) {
    if (colors.size() != params.vertex_count())
        throw validation_error("color array length must equal q^n");
    for (auto c : colors)
        if (c >= k) throw validation_error("color value outside palette [0,k)");
    return Coloring{params, k, std::move(colors)};
}

// Classes ordered by smallest member, members ascending.  Identical for any
// palette relabeling of the same coloring.
struct Partition {
    std::vector<std::vector<Vertex>> classes;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& other) const { return classes < other.classes; }
};

inline Partition canonical_partition(const Coloring& coloring) {
    std::vector<std::vector<Vertex>> by_color(coloring.k);
    for (Vertex v = 0; v < coloring.colors.size(); ++v)
        by_color[coloring.color(v)].push_back(v);
    Partition part;
    for (auto& cls : by_color)
        if (!cls.empty()) part.classes.push_back(std::move(cls));
    // members are already ascending; order classes by least member
    std::sort(part.classes.begin(), part.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return part;
}

inline std::vector<std::vector<Vertex>> color_classes(const Coloring& coloring) {
    std::vector<std::vector<Vertex>> by_color(coloring.k);
    for (Vertex v = 0; v < coloring.colors.size(); ++v)
        by_color[coloring.color(v)].push_back(v);
    return by_color;
}

// A coloring from a partition, class i -> color i.
inline Coloring coloring_from_classes(const GraphParams& params,
                                      const std::vector<std::vector<Vertex>>& classes) {
    std::vector<std::uint32_t> colors(static_cast<std::size_t>(params.vertex_count()), UINT32_MAX);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (Vertex v : classes[i]) {
            detail::check_index(params, v);
            if (colors[static_cast<std::size_t>(v)] != UINT32_MAX)
                throw validation_error("partition classes overlap");
            colors[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(i);
        }
    for (auto c : colors)
        if (c == UINT32_MAX) throw validation_error("partition does not cover all vertices");
    return Coloring{params, static_cast<std::uint32_t>(classes.size()), std::move(colors)};
}

// Full edge scan; no incremental bookkeeping.
inline bool is_proper(const HammingGraph& g, const Coloring& coloring) {
    if (coloring.params != g.params())
        throw validation_error("coloring parameters do not match the graph");
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (Vertex s : g.generators()) {
            Vertex y = add(g.params(), x, s);
            if (x < y && coloring.color(x) == coloring.color(y)) return false;
        }
    return true;
}

// Color = the word restricted to the given coordinates (1-based, strictly
// increasing, exactly n-d+1 of them), tuple-encoded little-endian like vertices.
// Adjacent vertices differ in more than n - (n-d+1) coordinates, so they can
// never agree on all chosen ones: the coloring is always proper.
inline Coloring coordinate_coloring(const HammingGraph& g, const std::vector<int>& indices) {
    const auto& p = g.params();
    if (static_cast<int>(indices.size()) != p.n - p.d + 1)
        throw validation_error("coordinate coloring needs exactly n-d+1 coordinates");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 1 || indices[i] > p.n)
            throw validation_error("coordinate index out of range");
        if (i > 0 && indices[i] <= indices[i - 1])
            throw validation_error("coordinate indices must be strictly increasing");
    }
    std::uint64_t k = detail::ipow(static_cast<std::uint64_t>(p.q), static_cast<int>(indices.size()));
    std::vector<std::uint32_t> colors(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t c = 0;
        std::uint64_t place = 1;
        for (int idx : indices) {
            c += static_cast<std::uint64_t>(digit(p, v, idx)) * place;
            place *= static_cast<std::uint64_t>(p.q);
        }
        colors[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(c);
    }
    return Coloring{p, static_cast<std::uint32_t>(k), std::move(colors)};
}

// True iff all used color classes have equal cardinality.
inline bool is_even(const Coloring& coloring) {
    std::vector<std::uint64_t> sizes(coloring.k, 0);
    for (auto c : coloring.colors) ++sizes[c];
    std::uint64_t common = 0;
    for (auto s : sizes) {
        if (s == 0) continue;
        if (common == 0) common = s;
        else if (s != common) return false;
    }
    return true;
}

// Exchange the colors of the two endpoints of an edge; everything else is
// unchanged.  The result is proper iff (x,y) is a transition edge.
inline Coloring swap_along_edge(const HammingGraph& g, const Coloring& coloring, Vertex x, Vertex y) {
    if (coloring.params != g.params())
        throw validation_error("coloring parameters do not match the graph");
    if (!g.is_edge(x, y)) throw validation_error("swap requires an edge of the graph");
    Coloring out = coloring;
    std::swap(out.colors[static_cast<std::size_t>(x)], out.colors[static_cast<std::size_t>(y)]);
    return out;
}

// --- JSON wire format ------------------------------------------------------
// {"q":..,"n":..,"d":..,"k":..,"colors":[..]} with vertex order = index order.

inline nlohmann::json coloring_to_json(const Coloring& coloring) {
    nlohmann::json j;
    j["q"] = coloring.params.q;
    j["n"] = coloring.params.n;
    j["d"] = coloring.params.d;
    j["k"] = coloring.k;
    j["colors"] = coloring.colors;
    return j;
}

inline std::string write_coloring(const Coloring& coloring) { return coloring_to_json(coloring).dump(); }

inline Coloring coloring_from_json(const nlohmann::json& j) {
    try {
        GraphParams params(j.at("q").get<int>(), j.at("n").get<int>(), j.at("d").get<int>());
        auto k = j.at("k").get<std::uint32_t>();
        auto colors = j.at("colors").get<std::vector<std::uint32_t>>();
        return make_coloring(params, k, std::move(colors));
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("malformed coloring JSON: ") + e.what());
    }
}

inline Coloring read_coloring(const std::string& bytes) {
    nlohmann::json j = nlohmann::json::parse(bytes, nullptr, false);
    if (j.is_discarded()) throw validation_error("coloring input is not valid JSON");
    return coloring_from_json(j);
}

} // namespace hamgraph
