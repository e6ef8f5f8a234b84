// The Hamming-distance graph H_q(n,d) as an implicit graph.
//
// H_q(n,d) is the Cayley graph of (Z_q^n,+) with connection set
// S_d = {v : wt(v) >= d}, so N(x) = x + S_d.  The graph is immutable after
// construction: S_d and (for q^n <= 4096) a bitset adjacency matrix are built
// eagerly, everything else is computed from closed forms or on demand.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "params.hpp"
#include "word.hpp"

namespace hamgraph {

namespace detail {

// n choose k without overflow surprises at the sizes we allow (n <= 64).
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (acc > static_cast<unsigned __int128>(UINT64_MAX))
            throw validation_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && out > UINT64_MAX / base)
            throw validation_error("integer power exceeds 64 bits");
        out *= base;
    }
    return out;
}

} // namespace detail

// Regular degree of H_q(n,d): sum_{i=0}^{n-d} C(n,i) (q-1)^{n-i}
// (a neighbor agrees with x in at most n-d coordinates).
inline std::uint64_t closed_form_degree(const GraphParams& p) {
    unsigned __int128 acc = 0;
    for (int i = 0; i <= p.n - p.d; ++i) {
        acc += static_cast<unsigned __int128>(detail::binomial(p.n, i)) *
               static_cast<unsigned __int128>(detail::ipow(static_cast<std::uint64_t>(p.q - 1), p.n - i));
        if (acc > static_cast<unsigned __int128>(UINT64_MAX))
            throw validation_error("degree exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

class HammingGraph {
public:
    // Materialized graphs are capped at 2^20 vertices.
    static constexpr std::uint64_t max_vertices = 1ull << 20;
    // Bitset adjacency matrix is cached up to this many vertices (2 MiB).
    static constexpr std::uint64_t adjacency_cache_limit = 4096;

    explicit HammingGraph(GraphParams params) : params_(params) {
        vertex_count_ = params_.vertex_count();
        if (vertex_count_ > max_vertices)
            throw validation_error(params_.label() + " is too large to materialize (over 2^20 vertices)");
        degree_ = closed_form_degree(params_);
        edge_count_ = vertex_count_ / 2 * degree_; // V*deg is even: V even or deg even
        if (vertex_count_ % 2 != 0) edge_count_ = vertex_count_ * (degree_ / 2);

        generators_.reserve(static_cast<std::size_t>(degree_));
        for (Vertex v = 0; v < vertex_count_; ++v)
            if (weight(params_, v) >= params_.d) generators_.push_back(v);

        if (vertex_count_ <= adjacency_cache_limit) {
            words_per_row_ = (vertex_count_ + 63) / 64;
            adjacency_.assign(static_cast<std::size_t>(vertex_count_ * words_per_row_), 0);
            for (Vertex x = 0; x < vertex_count_; ++x)
                for (Vertex s : generators_) {
                    Vertex y = add(params_, x, s);
                    adjacency_[static_cast<std::size_t>(x * words_per_row_ + y / 64)] |= 1ull << (y % 64);
                }
        }
    }

    const GraphParams& params() const { return params_; }
    std::uint64_t vertex_count() const { return vertex_count_; }
    std::uint64_t degree() const { return degree_; }
    std::uint64_t edge_count() const { return edge_count_; }

    // S_d = {v : wt(v) >= d}, ascending.
    const std::vector<Vertex>& generators() const { return generators_; }

    bool has_adjacency_cache() const { return !adjacency_.empty(); }
    std::uint64_t row_words() const { return words_per_row_; }
    const std::uint64_t* row(Vertex x) const { return adjacency_.data() + x * words_per_row_; }

    bool is_edge(Vertex x, Vertex y) const {
        detail::check_index(params_, x);
        detail::check_index(params_, y);
        if (x == y) throw validation_error("self-loop query: the graph has no loops");
        if (!adjacency_.empty())
            return (row(x)[y / 64] >> (y % 64)) & 1u;
        return distance(params_, x, y) >= params_.d;
    }

    // Neighbors in ascending canonical index order.
    std::vector<Vertex> neighbors(Vertex x) const {
        detail::check_index(params_, x);
        std::vector<Vertex> out;
        out.reserve(generators_.size());
        for (Vertex s : generators_) out.push_back(add(params_, x, s));
        std::sort(out.begin(), out.end());
        return out;
    }

    // v -> v + z, an adjacency-preserving permutation of the vertex set.
    std::vector<Vertex> translate(Vertex z) const {
        detail::check_index(params_, z);
        std::vector<Vertex> perm(static_cast<std::size_t>(vertex_count_));
        for (Vertex v = 0; v < vertex_count_; ++v)
            perm[static_cast<std::size_t>(v)] = add(params_, v, z);
        return perm;
    }

    // BFS shortest-path distance; SIZE_MAX never occurs (the graph is connected).
    std::uint64_t graph_distance(Vertex from, Vertex to) const {
        detail::check_index(params_, from);
        detail::check_index(params_, to);
        if (from == to) return 0;
        std::vector<std::uint32_t> dist(static_cast<std::size_t>(vertex_count_), UINT32_MAX);
        dist[static_cast<std::size_t>(from)] = 0;
        std::deque<Vertex> queue{from};
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex s : generators_) {
                Vertex y = add(params_, x, s);
                if (dist[static_cast<std::size_t>(y)] != UINT32_MAX) continue;
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                if (y == to) return dist[static_cast<std::size_t>(y)];
                queue.push_back(y);
            }
        }
        return UINT64_MAX;
    }

    // Number of vertices reachable from 0 (connectivity check).
    std::uint64_t reachable_from_zero() const {
        std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
        seen[0] = 1;
        std::uint64_t count = 1;
        std::deque<Vertex> queue{0};
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex s : generators_) {
                Vertex y = add(params_, x, s);
                if (seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = 1;
                ++count;
                queue.push_back(y);
            }
        }
        return count;
    }

    // Girth from the closed-form dichotomy:
    //   q >= 3            -> 3
    //   q = 2, d <= 2n/3  -> 3
    //   q = 2, else       -> 4   (d < n always holds here)
    int girth() const {
        if (params_.q >= 3) return 3;
        if (3 * params_.d <= 2 * params_.n) return 3;
        return 4;
    }

    // Shortest cycle through `start` found by BFS.  The start vertex lies on a
    // shortest cycle of the whole graph (translate any shortest cycle onto it),
    // so this equals the girth for every start vertex.
    int girth_bfs(Vertex start = 0) const {
        std::vector<std::uint32_t> dist(static_cast<std::size_t>(vertex_count_), UINT32_MAX);
        std::vector<Vertex> parent(static_cast<std::size_t>(vertex_count_), UINT64_MAX);
        dist[static_cast<std::size_t>(start)] = 0;
        std::deque<Vertex> queue{start};
        std::uint32_t best = UINT32_MAX;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            if (2 * dist[static_cast<std::size_t>(x)] >= best) break;
            for (Vertex s : generators_) {
                Vertex y = add(params_, x, s);
                if (dist[static_cast<std::size_t>(y)] == UINT32_MAX) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    parent[static_cast<std::size_t>(y)] = x;
                    queue.push_back(y);
                } else if (parent[static_cast<std::size_t>(x)] != y) {
                    // non-tree edge closes a cycle through the BFS root
                    best = std::min<std::uint32_t>(
                        best, dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1);
                }
            }
        }
        return static_cast<int>(best);
    }

    // Girth verified by BFS from every vertex instead of vertex 0 only.
    int girth_bfs_full() const {
        int best = girth_bfs(0);
        for (Vertex v = 1; v < vertex_count_; ++v) best = std::min(best, girth_bfs(v));
        return best;
    }

    // The explicit odd closed walk 0, f_1, f_1+f_2, ... for q=2, 2n/3 < d < n:
    // length n when n is odd, n+1 (via the all-ones vector) when n is even.
    // Returned closed: front() == back().
    std::vector<Vertex> odd_cycle() const {
        if (params_.q != 2 || 3 * params_.d <= 2 * params_.n || params_.d >= params_.n)
            throw validation_error("odd cycle construction requires q=2 and 2n/3 < d < n");
        std::vector<Vertex> cycle{0};
        Vertex acc = 0;
        for (int i = 1; i <= params_.n; ++i) {
            acc ^= punctured_ones(params_, i);
            cycle.push_back(acc);
        }
        // n odd: the partial sums return to 0; n even: they reach 1, close via 0.
        if (params_.n % 2 == 0) cycle.push_back(0);
        return cycle;
    }

private:
    GraphParams params_;
    std::uint64_t vertex_count_ = 0;
    std::uint64_t degree_ = 0;
    std::uint64_t edge_count_ = 0;
    std::vector<Vertex> generators_;
    std::vector<std::uint64_t> adjacency_;
    std::uint64_t words_per_row_ = 0;
};

} // namespace hamgraph
