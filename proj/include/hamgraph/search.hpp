// Exact search kernels: maximum clique, maximum independent set (anticode),
// k-colorability, chromatic number, exhaustive coloring enumeration.
//
// All solvers are deterministic: values are order-independent maxima, and
// witnesses are recomputed in a separate lexicographic-refinement phase, so
// thread count and symmetry breaking cannot leak into results.  Time budgets
// are first-class: an exhausted budget yields status budget_exhausted and
// never an unproven value presented as exact.
#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "coloring.hpp"
#include "graph.hpp"

namespace hamgraph {

struct SearchConfig {
    std::optional<double> time_budget_seconds;
    int thread_count = 1;
    bool symmetry_breaking = true;
};

enum class SearchStatus { proven, budget_exhausted };

struct SetSearchResult {
    std::uint64_t value = 0;            // proven optimum, or best found on exhaustion
    std::vector<Vertex> witness;        // always a valid clique / independent set
    SearchStatus status = SearchStatus::proven;
};

enum class Ternary { yes, no, unknown };

struct ColorabilityResult {
    Ternary answer = Ternary::unknown;
    std::optional<Coloring> witness;    // set when answer == yes
};

struct ChromaticResult {
    std::uint64_t lower = 0;            // proven bracket; lower == upper when proven
    std::uint64_t upper = 0;
    std::optional<Coloring> witness;    // proper upper-bound coloring
    SearchStatus status = SearchStatus::proven;

    std::uint64_t value() const { return upper; }
};

struct EnumerationResult {
    std::vector<Partition> partitions;
    SearchStatus status = SearchStatus::proven;
};

namespace detail {

// Exact search operates on the cached-adjacency regime.
constexpr std::uint64_t solver_vertex_limit = 4096;

inline void require_solver_scale(const HammingGraph& g) {
    if (g.vertex_count() > solver_vertex_limit || !g.has_adjacency_cache())
        throw validation_error("exact search supports graphs with at most 4096 vertices");
}

struct Deadline {
    std::optional<std::chrono::steady_clock::time_point> at;

    static Deadline from(const SearchConfig& cfg) {
        Deadline d;
        if (cfg.time_budget_seconds)
            d.at = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(*cfg.time_budget_seconds));
        return d;
    }

    bool expired() const { return at && std::chrono::steady_clock::now() >= *at; }
};

using Bits = std::vector<std::uint64_t>;

inline bool bits_test(const Bits& b, std::uint32_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
inline void bits_set(Bits& b, std::uint32_t i) { b[i >> 6] |= 1ull << (i & 63); }
inline void bits_reset(Bits& b, std::uint32_t i) { b[i >> 6] &= ~(1ull << (i & 63)); }

inline bool bits_empty(const Bits& b) {
    for (auto w : b)
        if (w) return false;
    return true;
}

template <typename F>
inline void bits_for_each(const Bits& b, F&& f) {
    for (std::size_t wi = 0; wi < b.size(); ++wi) {
        std::uint64_t w = b[wi];
        while (w) {
            f(static_cast<std::uint32_t>((wi << 6) + std::countr_zero(w)));
            w &= w - 1;
        }
    }
}

// Adjacency bitsets for the solver, optionally complemented (then a "clique"
// is an independent set of the original graph).
struct SolverGraph {
    std::uint32_t count = 0;
    std::uint32_t words = 0;
    std::vector<std::uint64_t> rows;

    SolverGraph(const HammingGraph& g, bool complement) {
        require_solver_scale(g);
        count = static_cast<std::uint32_t>(g.vertex_count());
        words = static_cast<std::uint32_t>((count + 63) / 64);
        rows.assign(static_cast<std::size_t>(count) * words, 0);
        for (std::uint32_t v = 0; v < count; ++v) {
            auto* dst = row(v);
            const auto* src = g.row(v);
            if (!complement) {
                for (std::uint32_t w = 0; w < words; ++w) dst[w] = src[w];
            } else {
                for (std::uint32_t w = 0; w < words; ++w) dst[w] = ~src[w];
                // mask tail bits and the self loop introduced by complementing
                if (count & 63) dst[words - 1] &= (1ull << (count & 63)) - 1;
                dst[v >> 6] &= ~(1ull << (v & 63));
            }
        }
    }

    std::uint64_t* row(std::uint32_t v) { return rows.data() + static_cast<std::size_t>(v) * words; }
    const std::uint64_t* row(std::uint32_t v) const {
        return rows.data() + static_cast<std::size_t>(v) * words;
    }

    Bits full() const {
        Bits b(words, 0);
        for (std::uint32_t v = 0; v < count; ++v) bits_set(b, v);
        return b;
    }
};

// Branch-and-bound maximum clique with a greedy-coloring bound (candidates are
// grouped into color classes; a clique can use at most one vertex per class).
struct CliqueSearch {
    const SolverGraph& graph;
    Deadline deadline;
    std::atomic<std::uint32_t>* shared_best = nullptr; // cross-thread incumbent (optional)
    std::uint32_t best = 0;
    std::vector<std::uint32_t> best_set;
    std::uint32_t stop_at = UINT32_MAX; // decision mode: stop once this size is reached
    bool aborted = false;
    std::uint64_t nodes = 0;
    std::vector<std::uint32_t> current;

    explicit CliqueSearch(const SolverGraph& g) : graph(g) {}

    std::uint32_t incumbent() const {
        std::uint32_t b = best;
        if (shared_best) b = std::max(b, shared_best->load(std::memory_order_relaxed));
        if (stop_at != UINT32_MAX) b = std::max(b, stop_at - 1);
        return b;
    }

    void record(std::uint32_t size) {
        if (size > best) {
            best = size;
            best_set = current;
            if (shared_best) {
                std::uint32_t prev = shared_best->load(std::memory_order_relaxed);
                while (prev < size &&
                       !shared_best->compare_exchange_weak(prev, size, std::memory_order_relaxed)) {
                }
            }
        }
        if (best >= stop_at) aborted = true; // success in decision mode
    }

    bool found() const { return stop_at != UINT32_MAX && best >= stop_at; }

    // Greedy color classes over `cand`; emits branch order with class numbers.
    void color_sort(const Bits& cand, std::vector<std::uint32_t>& order,
                    std::vector<std::uint32_t>& bound) {
        order.clear();
        bound.clear();
        Bits uncolored = cand;
        std::uint32_t color = 0;
        Bits cls(graph.words);
        while (!bits_empty(uncolored)) {
            ++color;
            cls = uncolored;
            while (!bits_empty(cls)) {
                std::uint32_t v = 0;
                for (std::uint32_t w = 0; w < graph.words; ++w)
                    if (cls[w]) {
                        v = (w << 6) + static_cast<std::uint32_t>(std::countr_zero(cls[w]));
                        break;
                    }
                order.push_back(v);
                bound.push_back(color);
                bits_reset(uncolored, v);
                bits_reset(cls, v);
                const auto* r = graph.row(v);
                for (std::uint32_t w = 0; w < graph.words; ++w) cls[w] &= ~r[w];
            }
        }
    }

    void expand(Bits cand) {
        if (aborted) return;
        if ((++nodes & 1023u) == 0 && deadline.expired()) {
            aborted = true;
            return;
        }
        std::vector<std::uint32_t> order, bound;
        color_sort(cand, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (aborted) return;
            if (static_cast<std::uint32_t>(current.size()) + bound[i] <= incumbent()) return;
            std::uint32_t v = order[i];
            current.push_back(v);
            Bits next(graph.words);
            const auto* r = graph.row(v);
            bool empty = true;
            for (std::uint32_t w = 0; w < graph.words; ++w) {
                next[w] = cand[w] & r[w];
                empty &= next[w] == 0;
            }
            if (empty)
                record(static_cast<std::uint32_t>(current.size()));
            else
                expand(std::move(next));
            current.pop_back();
            bits_reset(cand, v);
        }
    }
};

// Does `graph` contain a clique of the given size within `cand`?
// Ternary: budget exhaustion yields unknown.
inline Ternary has_clique_of_size(const SolverGraph& graph, const Bits& cand, std::uint32_t size,
                                  const Deadline& deadline) {
    if (size == 0) return Ternary::yes;
    CliqueSearch search(graph);
    search.deadline = deadline;
    search.stop_at = size;
    search.expand(cand);
    if (search.found()) return Ternary::yes;
    if (search.aborted) return Ternary::unknown;
    return Ternary::no;
}

// Lexicographically least clique of exactly `size` (exists by assumption):
// grow the set in ascending index order, keeping a vertex iff the remainder
// stays completable.  Returns nothing if the deadline interferes.
inline std::optional<std::vector<Vertex>> lexmin_clique(const SolverGraph& graph, std::uint32_t size,
                                                        const Deadline& deadline) {
    std::vector<Vertex> chosen;
    Bits cand = graph.full();
    std::uint32_t remaining = size;
    std::uint32_t v = 0;
    while (remaining > 0) {
        bool advanced = false;
        for (; v < graph.count; ++v) {
            if (!bits_test(cand, v)) continue;
            Bits tail(graph.words);
            const auto* r = graph.row(v);
            for (std::uint32_t w = 0; w < graph.words; ++w) tail[w] = cand[w] & r[w];
            for (std::uint32_t u = 0; u <= v; ++u) bits_reset(tail, u); // members ascend
            auto verdict = has_clique_of_size(graph, tail, remaining - 1, deadline);
            if (verdict == Ternary::unknown) return std::nullopt;
            if (verdict == Ternary::yes) {
                chosen.push_back(v);
                cand = std::move(tail);
                --remaining;
                ++v;
                advanced = true;
                break;
            }
            bits_reset(cand, v);
        }
        if (!advanced) return std::nullopt; // cannot happen for a correct size
    }
    return chosen;
}

// Deterministic greedy solution over (weight, index) order; seeds the
// branch-and-bound incumbent.
inline std::vector<std::uint32_t> greedy_set(const SolverGraph& graph, const HammingGraph& g) {
    std::vector<std::uint32_t> order(graph.count);
    for (std::uint32_t i = 0; i < graph.count; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return weight(g.params(), a) < weight(g.params(), b);
    });
    std::vector<std::uint32_t> chosen;
    for (std::uint32_t v : order) {
        bool compatible = true;
        for (std::uint32_t u : chosen)
            if (!((graph.row(v)[u >> 6] >> (u & 63)) & 1u)) {
                compatible = false;
                break;
            }
        if (compatible) chosen.push_back(v);
    }
    return chosen;
}

// A branch job: forced prefix (pairwise compatible) plus its candidate set.
struct SetBranchJob {
    std::vector<std::uint32_t> forced;
    Bits cand;
};

// Orbital branching for q = 2: the coordinate permutations fixing the forced
// prefix are the products of symmetric groups on equal prefix-column
// patterns; their orbits on candidates are the per-class popcount vectors.
// Branching on "the minimal orbit containing a further solution element"
// visits one representative per orbit and then discards the whole orbit,
// which is exhaustive up to automorphisms of the prefix.
struct OrbitalContext {
    const SolverGraph& graph;
    const GraphParams params;
    int emit_depth; // emit jobs instead of recursing below this prefix size

    std::vector<std::uint64_t> class_masks(const std::vector<std::uint32_t>& forced) const {
        std::map<std::uint64_t, std::uint64_t> classes;
        for (int c = 0; c < params.n; ++c) {
            std::uint64_t pattern = 0;
            for (std::size_t i = 0; i < forced.size(); ++i)
                pattern |= ((static_cast<std::uint64_t>(forced[i]) >> c) & 1u) << i;
            classes[pattern] |= 1ull << c;
        }
        std::vector<std::uint64_t> masks;
        masks.reserve(classes.size());
        for (const auto& [pattern, mask] : classes) masks.push_back(mask);
        return masks;
    }

    void emit(std::vector<std::uint32_t>& forced, Bits cand, std::vector<SetBranchJob>& jobs) const {
        auto masks = class_masks(forced);
        if (static_cast<int>(forced.size()) >= emit_depth || masks.size() >= 6) {
            jobs.push_back(SetBranchJob{forced, std::move(cand)});
            return;
        }
        // group candidates into stabilizer orbits
        std::map<std::vector<int>, std::vector<std::uint32_t>> orbits;
        bits_for_each(cand, [&](std::uint32_t v) {
            std::vector<int> key(masks.size());
            for (std::size_t i = 0; i < masks.size(); ++i)
                key[i] = std::popcount(static_cast<std::uint64_t>(v) & masks[i]);
            orbits[key].push_back(v);
        });
        // the "no further element" case of this node
        jobs.push_back(SetBranchJob{forced, Bits(graph.words, 0)});
        Bits remaining = cand;
        for (const auto& [key, members] : orbits) {
            const std::uint32_t rep = members[0];
            Bits next(graph.words);
            const auto* r = graph.row(rep);
            for (std::uint32_t w = 0; w < graph.words; ++w) next[w] = remaining[w] & r[w];
            forced.push_back(rep);
            emit(forced, std::move(next), jobs);
            forced.pop_back();
            // solutions branched later contain nothing from this orbit
            for (std::uint32_t m : members) bits_reset(remaining, m);
        }
    }
};

inline SetSearchResult solve_max_set(const HammingGraph& g, bool complement,
                                     const SearchConfig& cfg) {
    SolverGraph graph(g, complement);
    Deadline deadline = Deadline::from(cfg);

    auto greedy = greedy_set(graph, g);
    std::atomic<std::uint32_t> shared_best{static_cast<std::uint32_t>(greedy.size())};

    // Build the deterministic branch list.
    std::vector<SetBranchJob> jobs;
    if (cfg.symmetry_breaking) {
        // vertex-transitivity: some optimum contains vertex 0
        std::vector<std::uint32_t> base{0};
        Bits root(graph.words);
        const auto* r = graph.row(0);
        for (std::uint32_t w = 0; w < graph.words; ++w) root[w] = r[w];
        if (g.params().q == 2) {
            OrbitalContext ctx{graph, g.params(), 3};
            ctx.emit(base, std::move(root), jobs);
        } else {
            jobs.push_back(SetBranchJob{std::move(base), std::move(root)});
        }
    } else {
        jobs.push_back(SetBranchJob{{}, graph.full()});
    }

    const int threads = std::max(1, cfg.thread_count);
    std::vector<CliqueSearch> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        workers.emplace_back(graph);
        workers.back().deadline = deadline;
        workers.back().shared_best = &shared_best;
    }
    auto run = [&](int t) {
        CliqueSearch& search = workers[static_cast<std::size_t>(t)];
        for (std::size_t i = static_cast<std::size_t>(t); i < jobs.size();
             i += static_cast<std::size_t>(threads)) {
            if (search.aborted) return;
            search.current = jobs[i].forced;
            search.record(static_cast<std::uint32_t>(search.current.size()));
            if (!bits_empty(jobs[i].cand)) search.expand(jobs[i].cand);
        }
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }

    bool aborted = false;
    std::uint32_t value = static_cast<std::uint32_t>(greedy.size());
    std::vector<std::uint32_t> some_set = greedy;
    for (auto& w : workers) {
        aborted |= w.aborted && !w.found();
        if (w.best > value) {
            value = w.best;
            some_set = w.best_set;
        }
    }

    SetSearchResult result;
    result.value = value;
    result.status = aborted ? SearchStatus::budget_exhausted : SearchStatus::proven;
    std::vector<Vertex> witness(some_set.begin(), some_set.end());
    std::sort(witness.begin(), witness.end());
    if (result.status == SearchStatus::proven && value > 0) {
        if (auto lex = lexmin_clique(graph, value, deadline)) witness = std::move(*lex);
    }
    result.witness = std::move(witness);
    return result;
}

} // namespace detail

// Exact clique number: cliques of H_q(n,d) are the q-ary block codes of
// length n and distance >= d.
inline SetSearchResult max_clique(const HammingGraph& g, const SearchConfig& cfg = {}) {
    return detail::solve_max_set(g, false, cfg);
}

// Exact independence number: independent sets are the anticodes of maximum
// distance d-1.
inline SetSearchResult max_independent_set(const HammingGraph& g, const SearchConfig& cfg = {}) {
    return detail::solve_max_set(g, true, cfg);
}

namespace detail {

// DSATUR-ordered backtracking decision solver for k-colorability.
struct ColoringSearch {
    std::uint32_t count;
    std::uint32_t k;
    std::uint32_t kwords;
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> adjacency;
    std::vector<std::int32_t> colors;
    std::vector<std::uint64_t> saturation; // per vertex: bitset of neighbor colors
    std::vector<std::uint32_t> saturation_count;
    Deadline deadline;
    bool aborted = false;
    std::uint64_t nodes = 0;
    bool restrict_new_colors = false;
    std::uint32_t max_used = 0; // colors 0..max_used-1 considered introduced

    ColoringSearch(const HammingGraph& g, std::uint32_t palette) {
        require_solver_scale(g);
        count = static_cast<std::uint32_t>(g.vertex_count());
        k = palette;
        kwords = (k + 63) / 64;
        offsets.assign(count + 1, 0);
        for (std::uint32_t v = 0; v < count; ++v) {
            const auto* r = g.row(v);
            std::uint32_t deg = 0;
            for (std::uint32_t w = 0; w < g.row_words(); ++w)
                deg += static_cast<std::uint32_t>(std::popcount(r[w]));
            offsets[v + 1] = offsets[v] + deg;
        }
        adjacency.resize(offsets[count]);
        for (std::uint32_t v = 0; v < count; ++v) {
            const auto* r = g.row(v);
            std::uint32_t pos = offsets[v];
            for (std::uint32_t w = 0; w < g.row_words(); ++w) {
                std::uint64_t bits = r[w];
                while (bits) {
                    adjacency[pos++] = (w << 6) + static_cast<std::uint32_t>(std::countr_zero(bits));
                    bits &= bits - 1;
                }
            }
        }
        colors.assign(count, -1);
        saturation.assign(static_cast<std::size_t>(count) * kwords, 0);
        saturation_count.assign(count, 0);
    }

    bool satur_test(std::uint32_t v, std::uint32_t c) const {
        return (saturation[static_cast<std::size_t>(v) * kwords + (c >> 6)] >> (c & 63)) & 1u;
    }

    // Assign v -> c, updating neighbor saturation.  Returns false (after
    // recording the undo list) if some uncolored neighbor runs out of colors.
    bool assign(std::uint32_t v, std::uint32_t c, std::vector<std::uint32_t>& touched) {
        colors[v] = static_cast<std::int32_t>(c);
        bool ok = true;
        for (std::uint32_t i = offsets[v]; i < offsets[v + 1]; ++i) {
            std::uint32_t u = adjacency[i];
            if (colors[u] >= 0) continue;
            auto& word = saturation[static_cast<std::size_t>(u) * kwords + (c >> 6)];
            if ((word >> (c & 63)) & 1u) continue;
            word |= 1ull << (c & 63);
            touched.push_back(u);
            if (++saturation_count[u] >= k) ok = false;
        }
        return ok;
    }

    void unassign(std::uint32_t v, std::uint32_t c, const std::vector<std::uint32_t>& touched) {
        colors[v] = -1;
        for (std::uint32_t u : touched) {
            saturation[static_cast<std::size_t>(u) * kwords + (c >> 6)] &= ~(1ull << (c & 63));
            --saturation_count[u];
        }
    }

    // Highest saturation first, lowest index among ties (degrees are constant
    // in a regular graph, so the degree tie-break never discriminates).
    std::int64_t pick() const {
        std::int64_t chosen = -1;
        std::uint32_t best_sat = 0;
        for (std::uint32_t v = 0; v < count; ++v) {
            if (colors[v] >= 0) continue;
            if (chosen < 0 || saturation_count[v] > best_sat) {
                chosen = v;
                best_sat = saturation_count[v];
            }
        }
        return chosen;
    }

    bool solve(std::uint32_t uncolored) {
        if (uncolored == 0) return true;
        if ((++nodes & 1023u) == 0 && deadline.expired()) {
            aborted = true;
            return false;
        }
        const auto v = static_cast<std::uint32_t>(pick());
        const std::uint32_t limit =
            restrict_new_colors ? std::min(k - 1, max_used) : k - 1;
        std::vector<std::uint32_t> touched;
        for (std::uint32_t c = 0; c <= limit; ++c) {
            if (satur_test(v, c)) continue;
            touched.clear();
            const std::uint32_t prev_max = max_used;
            if (c == max_used) ++max_used;
            if (assign(v, c, touched)) {
                if (solve(uncolored - 1)) return true;
            }
            unassign(v, c, touched);
            max_used = prev_max;
            if (aborted) return false;
        }
        return false;
    }
};

// Deterministic greedy maximal clique: start at 0, extend by ascending index.
inline std::vector<std::uint32_t> greedy_maximal_clique(const HammingGraph& g) {
    require_solver_scale(g);
    std::vector<std::uint32_t> clique{0};
    for (std::uint32_t v = 1; v < g.vertex_count(); ++v) {
        bool compatible = true;
        for (auto u : clique)
            if (!((g.row(v)[u >> 6] >> (u & 63)) & 1u)) {
                compatible = false;
                break;
            }
        if (compatible) clique.push_back(v);
    }
    return clique;
}

inline Coloring canonical_palette(const Coloring& c) {
    // relabel colors by first occurrence in vertex order
    std::vector<std::uint32_t> map(c.k, UINT32_MAX);
    std::uint32_t next = 0;
    Coloring out = c;
    for (auto& col : out.colors) {
        if (map[col] == UINT32_MAX) map[col] = next++;
        col = map[col];
    }
    return out;
}

// Lexicographically least proper coloring array: fix vertices in index order,
// smallest completable color first (completability checked by the decision
// solver).  Bounded by `deadline`; nullopt when it runs out.
inline std::optional<Coloring> lexmin_coloring(const HammingGraph& g, std::uint32_t k,
                                               const Deadline& deadline) {
    const auto count = static_cast<std::uint32_t>(g.vertex_count());
    std::vector<std::int32_t> fixed(count, -1);
    std::uint32_t highest = 0; // colors 0..highest-1 appear in the prefix
    for (std::uint32_t v = 0; v < count; ++v) {
        bool placed = false;
        const std::uint32_t limit = std::min(k - 1, highest);
        for (std::uint32_t c = 0; c <= limit && !placed; ++c) {
            bool clash = false;
            for (std::uint32_t u = 0; u < v && !clash; ++u)
                if (fixed[u] == static_cast<std::int32_t>(c) &&
                    ((g.row(v)[u >> 6] >> (u & 63)) & 1u))
                    clash = true;
            if (clash) continue;
            ColoringSearch search(g, k);
            search.deadline = deadline;
            // prefix colors are contiguous 0..highest-1, so unused palette
            // colors stay interchangeable and the introduction-order
            // restriction remains sound for the completion
            search.restrict_new_colors = true;
            search.max_used = std::max(highest, c + 1);
            std::vector<std::uint32_t> touched;
            bool feasible = true;
            for (std::uint32_t u = 0; u < v && feasible; ++u)
                feasible = search.assign(u, static_cast<std::uint32_t>(fixed[u]), touched);
            if (feasible) feasible = search.assign(v, c, touched);
            if (feasible && search.solve(count - v - 1)) {
                fixed[v] = static_cast<std::int32_t>(c);
                highest = std::max(highest, c + 1);
                placed = true;
            }
            if (search.aborted) return std::nullopt;
        }
        if (!placed) return std::nullopt; // deadline interference upstream
    }
    std::vector<std::uint32_t> colors(fixed.begin(), fixed.end());
    return Coloring{g.params(), k, std::move(colors)};
}

// Witness refinement is skipped above this size; a deterministic fallback
// witness is returned instead.
constexpr std::uint64_t lexmin_coloring_limit = 1024;

} // namespace detail

namespace detail {

inline ColorabilityResult is_k_colorable_impl(const HammingGraph& g, std::uint64_t k,
                                              const SearchConfig& cfg, const Deadline& deadline) {
    detail::require_solver_scale(g);
    const auto count = g.vertex_count();
    ColorabilityResult result;

    if (k == 0) {
        result.answer = Ternary::no;
        return result;
    }
    auto witness_from = [&](const Coloring& c) {
        result.answer = Ternary::yes;
        if (count <= detail::lexmin_coloring_limit && k <= 64) {
            if (auto lex = detail::lexmin_coloring(g, static_cast<std::uint32_t>(k), deadline)) {
                result.witness = std::move(*lex);
                return;
            }
        }
        result.witness = detail::canonical_palette(c);
    };

    if (k >= count) {
        std::vector<std::uint32_t> identity(static_cast<std::size_t>(count));
        for (std::uint32_t i = 0; i < count; ++i) identity[i] = i;
        witness_from(Coloring{g.params(), static_cast<std::uint32_t>(k), std::move(identity)});
        return result;
    }

    const auto report = chi_bounds(g.params());
    if (k < report.lower) {
        result.answer = Ternary::no;
        return result;
    }
    if (k >= report.upper) {
        // the coordinate coloring on the first n-d+1 coordinates always fits
        std::vector<int> indices(static_cast<std::size_t>(g.params().n - g.params().d + 1));
        for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = static_cast<int>(i + 1);
        Coloring coord = coordinate_coloring(g, indices);
        coord.k = static_cast<std::uint32_t>(k);
        witness_from(coord);
        return result;
    }

    detail::ColoringSearch search(g, static_cast<std::uint32_t>(k));
    search.deadline = deadline;
    std::uint32_t precolored = 0;
    if (cfg.symmetry_breaking) {
        auto clique = detail::greedy_maximal_clique(g);
        if (clique.size() > k) {
            result.answer = Ternary::no;
            return result;
        }
        std::vector<std::uint32_t> touched;
        bool feasible = true;
        for (std::size_t i = 0; i < clique.size(); ++i)
            feasible = search.assign(clique[i], static_cast<std::uint32_t>(i), touched) && feasible;
        search.max_used = static_cast<std::uint32_t>(clique.size());
        search.restrict_new_colors = true;
        precolored = static_cast<std::uint32_t>(clique.size());
        if (!feasible) {
            result.answer = Ternary::no; // a clique neighbor already saturated
            return result;
        }
    }
    const bool sat = search.solve(static_cast<std::uint32_t>(count) - precolored);
    if (sat) {
        std::vector<std::uint32_t> colors(search.colors.begin(), search.colors.end());
        witness_from(Coloring{g.params(), static_cast<std::uint32_t>(k), std::move(colors)});
        return result;
    }
    result.answer = search.aborted ? Ternary::unknown : Ternary::no;
    return result;
}

} // namespace detail

// Exact k-colorability decision.  Symmetry breaking precolors a greedy
// maximal clique and restricts the introduction order of new colors; the
// answer is invariant under both that flag and the thread count.
inline ColorabilityResult is_k_colorable(const HammingGraph& g, std::uint64_t k,
                                         const SearchConfig& cfg = {}) {
    return detail::is_k_colorable_impl(g, k, cfg, detail::Deadline::from(cfg));
}

// Exact chromatic number: closed-form bracket from the bounds module, then
// k-colorability upward from the lower end.  The time budget covers the whole
// climb; on exhaustion the honest bracket is returned, never a guess.
inline ChromaticResult chromatic_number(const HammingGraph& g, const SearchConfig& cfg = {}) {
    detail::require_solver_scale(g);
    detail::Deadline deadline = detail::Deadline::from(cfg);
    const auto report = chi_bounds(g.params());
    ChromaticResult result;
    result.lower = report.lower;
    result.upper = report.upper;
    for (std::uint64_t k = report.lower; k < report.upper; ++k) {
        auto decision = detail::is_k_colorable_impl(g, k, cfg, deadline);
        if (decision.answer == Ternary::yes) {
            result.lower = result.upper = k;
            result.witness = std::move(decision.witness);
            return result;
        }
        if (decision.answer == Ternary::unknown) {
            result.lower = k;
            result.status = SearchStatus::budget_exhausted;
            break;
        }
        result.lower = k + 1;
    }
    // chi equals the coordinate upper bound (or the bracket hit the budget)
    auto upper_witness = detail::is_k_colorable_impl(g, result.upper, cfg, deadline);
    result.witness = std::move(upper_witness.witness);
    return result;
}

// All proper colorings with at most k color classes, as canonical partitions.
// Enumerates restricted-growth assignments, so each partition appears exactly
// once; deterministic order.
inline EnumerationResult enumerate_colorings(const HammingGraph& g, std::uint32_t k,
                                             const SearchConfig& cfg = {}) {
    if (g.vertex_count() > 256)
        throw validation_error("coloring enumeration is limited to 256 vertices");
    const auto count = static_cast<std::uint32_t>(g.vertex_count());
    const auto words = static_cast<std::uint32_t>(g.row_words());
    detail::Deadline deadline = detail::Deadline::from(cfg);

    EnumerationResult result;
    std::vector<std::vector<Vertex>> classes;
    std::vector<detail::Bits> class_neighbors; // union of members' neighborhoods
    classes.reserve(k);
    std::uint64_t nodes = 0;
    bool aborted = false;

    auto recurse = [&](auto&& self, std::uint32_t v) -> void {
        if (aborted) return;
        if ((++nodes & 1023u) == 0 && deadline.expired()) {
            aborted = true;
            return;
        }
        if (v == count) {
            Partition part;
            part.classes = classes;
            result.partitions.push_back(std::move(part));
            return;
        }
        const std::uint32_t open = static_cast<std::uint32_t>(classes.size());
        for (std::uint32_t c = 0; c < open && !aborted; ++c) {
            if (detail::bits_test(class_neighbors[c], v)) continue; // adjacent to a member
            classes[c].push_back(v);
            detail::Bits saved = class_neighbors[c];
            const auto* r = g.row(v);
            for (std::uint32_t w = 0; w < words; ++w) class_neighbors[c][w] |= r[w];
            self(self, v + 1);
            class_neighbors[c] = std::move(saved);
            classes[c].pop_back();
        }
        if (open < k && !aborted) {
            classes.push_back({v});
            detail::Bits fresh(words, 0);
            const auto* r = g.row(v);
            for (std::uint32_t w = 0; w < words; ++w) fresh[w] = r[w];
            class_neighbors.push_back(std::move(fresh));
            self(self, v + 1);
            class_neighbors.pop_back();
            classes.pop_back();
        }
    };
    recurse(recurse, 0);

    result.status = aborted ? SearchStatus::budget_exhausted : SearchStatus::proven;
    std::sort(result.partitions.begin(), result.partitions.end());
    return result;
}

} // namespace hamgraph
