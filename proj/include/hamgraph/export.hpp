// Deterministic graph exporters: DIMACS edge format, DOT, JSON edge list.
// Edges are emitted smaller endpoint first, sorted; DIMACS/DOT are 1-based.
#pragma once

#include <sstream>
#include <string>

#include "json.hpp"

#include "graph.hpp"

namespace hamgraph {

enum class ExportFormat { dimacs, dot, edge_list_json };

inline ExportFormat parse_export_format(const std::string& s) {
    if (s == "dimacs") return ExportFormat::dimacs;
    if (s == "dot") return ExportFormat::dot;
    if (s == "json" || s == "edge-list-json") return ExportFormat::edge_list_json;
    throw validation_error("unknown export format '" + s + "' (expected dimacs, dot or json)");
}

inline std::string export_graph(const HammingGraph& g, ExportFormat format) {
    const auto v = g.vertex_count();
    std::ostringstream out;
    auto each_edge = [&](auto&& emit) {
        for (Vertex x = 0; x < v; ++x)
            for (Vertex y : g.neighbors(x))
                if (x < y) emit(x, y);
    };
    switch (format) {
    case ExportFormat::dimacs:
        out << "p edge " << v << " " << g.edge_count() << "\n";
        each_edge([&](Vertex x, Vertex y) { out << "e " << x + 1 << " " << y + 1 << "\n"; });
        break;
    case ExportFormat::dot:
        out << "graph " << "hamming_q" << g.params().q << "_n" << g.params().n << "_d" << g.params().d
            << " {\n";
        each_edge([&](Vertex x, Vertex y) { out << "  " << x + 1 << " -- " << y + 1 << ";\n"; });
        out << "}\n";
        break;
    case ExportFormat::edge_list_json: {
        nlohmann::json j;
        j["q"] = g.params().q;
        j["n"] = g.params().n;
        j["d"] = g.params().d;
        auto edges = nlohmann::json::array();
        each_edge([&](Vertex x, Vertex y) { edges.push_back({x, y}); });
        j["edges"] = std::move(edges);
        out << j.dump() << "\n";
        break;
    }
    }
    return out.str();
}

} // namespace hamgraph
