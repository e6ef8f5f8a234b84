// Reproducible coloring corpus for property tests: every embedded
// construction applicable to H_2(n,n-1) plus seeded random swap walks that
// move from coordinate colorings along transition edges.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "constructions.hpp"
#include "transitions.hpp"

namespace hamgraph {

struct CorpusConfig {
    std::uint64_t seed = 0x48414D47; // "HAMG"
    int walks_per_coloring = 3;
    int steps_per_walk = 8;
};

// Proper 4-colorings of H_2(n,n-1).  Deterministic for a fixed seed; walk
// steps pick a transition edge by raw draw modulo edge count (portable,
// unlike the standard distributions).
inline std::vector<Coloring> coloring_corpus(const HammingGraph& g, const CorpusConfig& cfg = {}) {
    const auto& p = g.params();
    if (p.q != 2 || p.d != p.n - 1 || p.n < 3)
        throw validation_error("the coloring corpus is defined for H_2(n,n-1), n >= 3");

    std::vector<Coloring> corpus;
    std::vector<Coloring> walk_starts;
    for (int i = 1; i <= p.n; ++i)
        for (int j = i + 1; j <= p.n; ++j) {
            corpus.push_back(coordinate_coloring(g, {i, j}));
            walk_starts.push_back(corpus.back());
        }
    if (p.n % 2 == 0)
        for (int j = 1; j <= p.n; ++j) corpus.push_back(parity_coloring(p.n, j).coloring);
    if (p.n == 3)
        for (int i = 1; i <= 9; ++i) corpus.push_back(figure2(i).coloring);
    if (p.n == 4) {
        corpus.push_back(h243_example(1).coloring);
        corpus.push_back(h243_example(2).coloring);
        corpus.push_back(uneven_variant(2, {{"0000", 1}}).coloring);
        corpus.push_back(uneven_variant(2, {{"1111", 2}}).coloring);
        corpus.push_back(uneven_variant(2, {{"0000", 1}, {"1111", 2}}).coloring);
        corpus.push_back(uneven_variant(1, {{"0000", 3}}).coloring);
    }
    if (p.n == 5) corpus.push_back(swapped_h254().coloring);

    std::mt19937_64 rng(cfg.seed ^ (static_cast<std::uint64_t>(p.n) << 8) ^
                        static_cast<std::uint64_t>(p.d));
    for (const auto& start : walk_starts)
        for (int walk = 0; walk < cfg.walks_per_coloring; ++walk) {
            Coloring current = start;
            for (int step = 0; step < cfg.steps_per_walk; ++step) {
                auto space = transition_space(g, current);
                if (space.edges.empty()) break;
                const auto& edge = space.edges[static_cast<std::size_t>(
                    rng() % static_cast<std::uint64_t>(space.edges.size()))];
                current = swap_along_edge(g, current, edge.first, edge.second);
                corpus.push_back(current);
            }
        }
    return corpus;
}

} // namespace hamgraph
