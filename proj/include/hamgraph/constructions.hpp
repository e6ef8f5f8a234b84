// Named coloring constructions, embedded as literal data where they are
// ground truth for tests and built from code constructions elsewhere.
//
// Names accepted by construct_by_name:
//   figure2:<1..9>           the nine minimal colorings of H_2(3,2)
//   h243:<1|2>               the uneven/even 4-coloring examples on H_2(4,3)
//   h243-uneven:<variant>    listed uneven variants (2:0000to1, 2:1111to2,
//                            2:both, 1:0000to3)
//   parity:<n>:<j>           weight-parity x coordinate-j coloring, n even
//   swapped254               (1,2)-coordinate coloring of H_2(5,4), one swap
//   hammingcoset:<q>         coset coloring of H_q(q+1,3), q prime
//   uneven27                 uneven 27-coloring of H_3(5,3)
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "coloring.hpp"
#include "graph.hpp"
#include "transitions.hpp"

namespace hamgraph {

struct NamedColoring {
    std::string name;
    Coloring coloring;
    std::string provenance;
};

namespace detail {

inline Coloring coloring_from_words(const GraphParams& p,
                                    const std::vector<std::vector<const char*>>& classes) {
    std::vector<std::vector<Vertex>> parsed;
    parsed.reserve(classes.size());
    for (const auto& cls : classes) {
        std::vector<Vertex> members;
        members.reserve(cls.size());
        for (const char* word : cls) members.push_back(parse_word(p, word));
        parsed.push_back(std::move(members));
    }
    return coloring_from_classes(p, parsed);
}

} // namespace detail

// The nine proper 4-colorings of H_2(3,2), in the fixed reference order:
// rows 1-3 are the (1,2)-, (1,3)-, (2,3)-coordinate colorings, rows 4-9 are
// one transition swap away from a coordinate coloring.
inline NamedColoring figure2(int i) {
    static const std::array<std::vector<std::vector<const char*>>, 9> rows = {{
        {{"000", "001"}, {"100", "101"}, {"010", "011"}, {"110", "111"}},
        {{"000", "010"}, {"100", "110"}, {"001", "011"}, {"101", "111"}},
        {{"000", "100"}, {"010", "110"}, {"001", "101"}, {"011", "111"}},
        {{"000", "100"}, {"010", "110"}, {"001", "011"}, {"101", "111"}},
        {{"000", "100"}, {"010", "011"}, {"001", "101"}, {"110", "111"}},
        {{"000", "010"}, {"100", "110"}, {"001", "101"}, {"011", "111"}},
        {{"000", "010"}, {"100", "101"}, {"001", "011"}, {"110", "111"}},
        {{"000", "001"}, {"100", "110"}, {"010", "011"}, {"101", "111"}},
        {{"000", "001"}, {"100", "101"}, {"010", "110"}, {"011", "111"}},
    }};
    if (i < 1 || i > 9) throw validation_error("figure2 index must be in 1..9");
    GraphParams p(2, 3, 2);
    return NamedColoring{"figure2:" + std::to_string(i),
                         detail::coloring_from_words(p, rows[static_cast<std::size_t>(i - 1)]),
                         "minimal coloring " + std::to_string(i) + " of H_2(3,2)"};
}

// Two hand-picked 4-colorings of H_2(4,3): the first uneven (class sizes
// 4,3,4,5), the second even but more than one swap from a coordinate coloring.
inline NamedColoring h243_example(int which) {
    static const std::vector<std::vector<const char*>> k1 = {
        {"0000", "1000", "0100", "1100"},
        {"0010", "1010", "0110"},
        {"0001", "1001", "0101", "0011"},
        {"1110", "1101", "1011", "0111", "1111"},
    };
    static const std::vector<std::vector<const char*>> k2 = {
        {"0001", "0010", "0100", "1000"},
        {"1110", "1101", "1011", "0111"},
        {"1111", "1100", "0110", "1010"},
        {"0000", "0011", "0101", "1001"},
    };
    if (which != 1 && which != 2) throw validation_error("h243 example index must be 1 or 2");
    GraphParams p(2, 4, 3);
    return NamedColoring{"h243:" + std::to_string(which),
                         detail::coloring_from_words(p, which == 1 ? k1 : k2),
                         which == 1 ? "uneven 4-coloring example on H_2(4,3)"
                                    : "even non-coordinate 4-coloring example on H_2(4,3)"};
}

// A single listed modification: move `word` into 1-based class `target`.
struct UnevenMove {
    std::string word;
    int target = 0;

    bool operator==(const UnevenMove&) const = default;
};

// The listed uneven modifications of the H_2(4,3) examples: for the even
// coloring, 0000 may join class 1 and/or 1111 class 2; for the uneven one,
// 0000 may join class 3.  Anything else is rejected.
inline NamedColoring uneven_variant(int base, const std::vector<UnevenMove>& moves) {
    auto named = h243_example(base);
    if (moves.empty()) throw validation_error("uneven variant requires at least one move");
    for (const auto& move : moves) {
        const bool listed = (base == 2 && move == UnevenMove{"0000", 1}) ||
                            (base == 2 && move == UnevenMove{"1111", 2}) ||
                            (base == 1 && move == UnevenMove{"0000", 3});
        if (!listed)
            throw validation_error("move of " + move.word + " to class " +
                                   std::to_string(move.target) + " is not a listed variant");
        Vertex v = parse_word(named.coloring.params, move.word);
        named.coloring.colors[static_cast<std::size_t>(v)] =
            static_cast<std::uint32_t>(move.target - 1);
    }
    std::string suffix;
    for (const auto& move : moves) suffix += ":" + move.word + "to" + std::to_string(move.target);
    named.name = "h243-uneven:" + std::to_string(base) + suffix;
    named.provenance = "uneven variant of h243:" + std::to_string(base);
    return named;
}

// Color classes A^nu_mu = {v : wt(v) = nu mod 2, v_j = mu} on H_2(n,n-1);
// proper and even for even n, with transition space generated by {1, f_j}.
inline NamedColoring parity_coloring(int n, int j) {
    if (n % 2 != 0) throw validation_error("parity coloring requires even n");
    GraphParams p(2, n, n - 1);
    if (j < 1 || j > n) throw validation_error("coordinate j out of range");
    const auto count = p.vertex_count();
    std::vector<std::uint32_t> colors(static_cast<std::size_t>(count));
    for (Vertex v = 0; v < count; ++v) {
        const std::uint32_t nu = static_cast<std::uint32_t>(weight_parity(p, v));
        const std::uint32_t mu = static_cast<std::uint32_t>(digit(p, v, j));
        colors[static_cast<std::size_t>(v)] = nu + 2 * mu;
    }
    return NamedColoring{"parity:" + std::to_string(n) + ":" + std::to_string(j),
                         Coloring{p, 4, std::move(colors)},
                         "weight-parity x coordinate-" + std::to_string(j) + " coloring"};
}

// Even 4-coloring of H_2(5,4) whose transition space is nonempty but not
// generated: the (1,2)-coordinate coloring with the colors of 00000 and
// 10111 swapped.
inline NamedColoring swapped_h254() {
    HammingGraph g(GraphParams(2, 5, 4));
    Coloring coord = coordinate_coloring(g, {1, 2});
    Coloring swapped = swap_along_edge(g, coord, parse_word(g.params(), "00000"),
                                       parse_word(g.params(), "10111"));
    return NamedColoring{"swapped254", std::move(swapped),
                         "(1,2)-coordinate coloring of H_2(5,4) with one swap"};
}

namespace detail {

// Kernel of the 2 x (q+1) parity-check matrix whose columns are the
// normalized projective points (0,1), (1,0), (1,1), ..., (1,q-1) in
// lexicographic order: the q-ary Hamming [q+1, q-1, 3] code.
inline std::vector<Vertex> hamming_code(const GraphParams& p) {
    std::vector<std::array<int, 2>> columns;
    columns.push_back({0, 1});
    for (int a = 0; a < p.q; ++a) columns.push_back({1, a});
    std::vector<Vertex> code;
    const auto count = p.vertex_count();
    for (Vertex v = 0; v < count; ++v) {
        int s0 = 0, s1 = 0;
        for (int i = 1; i <= p.n; ++i) {
            const int dig = digit(p, v, i);
            s0 = (s0 + columns[static_cast<std::size_t>(i - 1)][0] * dig) % p.q;
            s1 = (s1 + columns[static_cast<std::size_t>(i - 1)][1] * dig) % p.q;
        }
        if (s0 == 0 && s1 == 0) code.push_back(v);
    }
    return code;
}

} // namespace detail

// Coset coloring of H_q(q+1,3) for prime q: color classes are the shifts
// v + I of the radius-1 ball I = {wt <= 1} by the codewords of the q-ary
// Hamming [q+1, q-1, 3] code (a perfect MDS code, so the shifts partition
// the space).  q^{q-1} classes of size q^2 each; not a coordinate coloring.
inline NamedColoring hamming_coset_coloring(int q) {
    if (!is_prime(q)) throw validation_error("coset coloring requires prime q");
    GraphParams p(q, q + 1, 3);
    const auto count = p.vertex_count();
    auto code = detail::hamming_code(p);
    const auto expected = detail::ipow(static_cast<std::uint64_t>(q), q - 1);
    if (code.size() != expected)
        throw std::logic_error("Hamming code has wrong size: bug");

    std::vector<Vertex> ball{0};
    for (int i = 1; i <= p.n; ++i)
        for (int a = 1; a < q; ++a)
            ball.push_back(add(p, Vertex{0}, static_cast<Vertex>(a) * unit(p, i)));

    std::vector<std::uint32_t> colors(static_cast<std::size_t>(count), UINT32_MAX);
    for (std::size_t ci = 0; ci < code.size(); ++ci)
        for (Vertex u : ball) {
            Vertex v = add(p, code[ci], u);
            if (colors[static_cast<std::size_t>(v)] != UINT32_MAX)
                throw std::logic_error("code shifts overlap: bug");
            colors[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(ci);
        }
    for (auto c : colors)
        if (c == UINT32_MAX) throw std::logic_error("code shifts do not cover: bug");
    return NamedColoring{"hammingcoset:" + std::to_string(q),
                         Coloring{p, static_cast<std::uint32_t>(code.size()), std::move(colors)},
                         "coset coloring from the " + std::to_string(q) + "-ary Hamming code"};
}

// Uneven 27-coloring of H_3(5,3): pad the length-4 ternary Hamming code with
// a zero coordinate, then shift the three independent sets
//   J = {wt <= 1} (11 words), B_a = {(u,a) : wt(u) = 1} (8 words, a = 1,2)
// by every padded codeword.  27 classes of sizes 11/8/8 partition Z_3^5.
inline NamedColoring uneven27() {
    GraphParams p4(3, 4, 3);
    GraphParams p(3, 5, 3);
    auto code4 = detail::hamming_code(p4); // 9 codewords of the tetracode
    const auto count = p.vertex_count();

    std::vector<Vertex> ball_j{0};
    for (int i = 1; i <= p.n; ++i)
        for (int a = 1; a <= 2; ++a) ball_j.push_back(static_cast<Vertex>(a) * unit(p, i));
    std::vector<std::vector<Vertex>> sets{ball_j};
    for (int alpha = 1; alpha <= 2; ++alpha) {
        std::vector<Vertex> b;
        for (int i = 1; i <= 4; ++i)
            for (int a = 1; a <= 2; ++a)
                b.push_back(static_cast<Vertex>(a) * unit(p, i) +
                            static_cast<Vertex>(alpha) * unit(p, 5));
        sets.push_back(std::move(b));
    }

    std::vector<std::uint32_t> colors(static_cast<std::size_t>(count), UINT32_MAX);
    std::uint32_t next = 0;
    for (Vertex cw : code4) {
        // pad with a fifth zero coordinate: same integer value under the
        // little-endian encoding
        for (const auto& set : sets) {
            for (Vertex u : set) {
                Vertex v = add(p, cw, u);
                if (colors[static_cast<std::size_t>(v)] != UINT32_MAX)
                    throw std::logic_error("uneven27 classes overlap: bug");
                colors[static_cast<std::size_t>(v)] = next;
            }
            ++next;
        }
    }
    for (auto c : colors)
        if (c == UINT32_MAX) throw std::logic_error("uneven27 classes do not cover: bug");
    return NamedColoring{"uneven27", Coloring{p, 27, std::move(colors)},
                         "uneven 27-coloring of H_3(5,3) from padded tetracode cosets"};
}

inline NamedColoring construct_by_name(const std::string& name) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto next = s.find(':', pos);
            if (next == std::string::npos) {
                parts.push_back(s.substr(pos));
                break;
            }
            parts.push_back(s.substr(pos, next - pos));
            pos = next + 1;
        }
        return parts;
    };
    auto to_int = [](const std::string& s) {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw validation_error("bad integer '" + s + "'");
            return v;
        } catch (const std::exception&) {
            throw validation_error("bad integer '" + s + "' in construction name");
        }
    };
    auto parts = split(name);
    const auto& kind = parts[0];
    if (kind == "figure2" && parts.size() == 2) return figure2(to_int(parts[1]));
    if (kind == "h243" && parts.size() == 2) return h243_example(to_int(parts[1]));
    if (kind == "h243-uneven" && parts.size() >= 3) {
        int base = to_int(parts[1]);
        std::vector<UnevenMove> moves;
        for (std::size_t i = 2; i < parts.size(); ++i) {
            const auto& m = parts[i];
            if (base == 2 && m == "0000to1") moves.push_back({"0000", 1});
            else if (base == 2 && m == "1111to2") moves.push_back({"1111", 2});
            else if (base == 2 && m == "both") {
                moves.push_back({"0000", 1});
                moves.push_back({"1111", 2});
            } else if (base == 1 && m == "0000to3") moves.push_back({"0000", 3});
            else throw validation_error("unknown uneven variant '" + m + "'");
        }
        return uneven_variant(base, moves);
    }
    if (kind == "parity" && parts.size() == 3) return parity_coloring(to_int(parts[1]), to_int(parts[2]));
    if (kind == "swapped254" && parts.size() == 1) return swapped_h254();
    if (kind == "hammingcoset" && parts.size() == 2) return hamming_coset_coloring(to_int(parts[1]));
    if (kind == "uneven27" && parts.size() == 1) return uneven27();
    throw validation_error("unknown construction '" + name + "'");
}

} // namespace hamgraph
