// Words over Z_q^n addressed by their canonical integer index.
//
// Coordinate 1 is the least-significant base-q digit:
//     index = sum_i coords[i] * q^(i-1),   coords[i] in {0,...,q-1}.
// For q=2 the index IS the bit pattern, so addition is XOR and weight is
// popcount; all hot loops rely on that fast path.
// Word strings are written coordinate 1 first ("0111" means x1=0, x2=x3=x4=1).
#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "params.hpp"

namespace hamgraph {

using Vertex = std::uint64_t;

namespace detail {

inline void check_index(const GraphParams& p, Vertex x) {
    if (x >= p.vertex_count())
        throw validation_error("vertex index out of range for " + p.label());
}

} // namespace detail

// digit i (1-based coordinate) of x.
inline int digit(const GraphParams& p, Vertex x, int i) {
    if (p.q == 2) return static_cast<int>((x >> (i - 1)) & 1u);
    for (int j = 1; j < i; ++j) x /= static_cast<std::uint64_t>(p.q);
    return static_cast<int>(x % static_cast<std::uint64_t>(p.q));
}

// index -> digit vector (coordinate 1 first).
inline std::vector<std::uint8_t> decode(const GraphParams& p, Vertex x) {
    detail::check_index(p, x);
    std::vector<std::uint8_t> coords(static_cast<std::size_t>(p.n));
    for (int i = 0; i < p.n; ++i) {
        coords[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x % static_cast<std::uint64_t>(p.q));
        x /= static_cast<std::uint64_t>(p.q);
    }
    return coords;
}

// digit vector (coordinate 1 first) -> index.
inline Vertex encode(const GraphParams& p, const std::vector<std::uint8_t>& coords) {
    if (static_cast<int>(coords.size()) != p.n)
        throw validation_error("coordinate vector has wrong length for " + p.label());
    Vertex x = 0;
    for (int i = p.n - 1; i >= 0; --i) {
        if (coords[static_cast<std::size_t>(i)] >= p.q)
            throw validation_error("digit out of range for alphabet size " + std::to_string(p.q));
        x = x * static_cast<std::uint64_t>(p.q) + coords[static_cast<std::size_t>(i)];
    }
    return x;
}

inline int weight(const GraphParams& p, Vertex x) {
    detail::check_index(p, x);
    if (p.q == 2) return std::popcount(x);
    int w = 0;
    for (int i = 0; i < p.n; ++i) {
        if (x % static_cast<std::uint64_t>(p.q) != 0) ++w;
        x /= static_cast<std::uint64_t>(p.q);
    }
    return w;
}

inline int distance(const GraphParams& p, Vertex x, Vertex y) {
    detail::check_index(p, x);
    detail::check_index(p, y);
    if (p.q == 2) return std::popcount(x ^ y);
    int dist = 0;
    for (int i = 0; i < p.n; ++i) {
        if (x % static_cast<std::uint64_t>(p.q) != y % static_cast<std::uint64_t>(p.q)) ++dist;
        x /= static_cast<std::uint64_t>(p.q);
        y /= static_cast<std::uint64_t>(p.q);
    }
    return dist;
}

// coordinatewise sum modulo q.
inline Vertex add(const GraphParams& p, Vertex x, Vertex y) {
    detail::check_index(p, x);
    detail::check_index(p, y);
    if (p.q == 2) return x ^ y;
    Vertex out = 0;
    std::uint64_t place = 1;
    for (int i = 0; i < p.n; ++i) {
        auto s = (x % static_cast<std::uint64_t>(p.q) + y % static_cast<std::uint64_t>(p.q)) %
                 static_cast<std::uint64_t>(p.q);
        out += s * place;
        place *= static_cast<std::uint64_t>(p.q);
        x /= static_cast<std::uint64_t>(p.q);
        y /= static_cast<std::uint64_t>(p.q);
    }
    return out;
}

// coordinatewise negation modulo q (the additive inverse).
inline Vertex negate(const GraphParams& p, Vertex x) {
    detail::check_index(p, x);
    if (p.q == 2) return x;
    Vertex out = 0;
    std::uint64_t place = 1;
    for (int i = 0; i < p.n; ++i) {
        auto dig = x % static_cast<std::uint64_t>(p.q);
        out += (dig == 0 ? 0 : static_cast<std::uint64_t>(p.q) - dig) * place;
        place *= static_cast<std::uint64_t>(p.q);
        x /= static_cast<std::uint64_t>(p.q);
    }
    return out;
}

// wt(x) mod 2; defined for the binary alphabet only.
inline int weight_parity(const GraphParams& p, Vertex x) {
    if (p.q != 2) throw validation_error("weight parity is defined for q = 2 only");
    detail::check_index(p, x);
    return std::popcount(x) & 1;
}

// The all-ones vector, the unit vectors e_i and (for q=2) f_i = e_i + 1.
inline Vertex all_ones(const GraphParams& p) {
    Vertex x = 0;
    std::uint64_t place = 1;
    for (int i = 0; i < p.n; ++i) {
        x += place;
        place *= static_cast<std::uint64_t>(p.q);
    }
    return x;
}

inline Vertex unit(const GraphParams& p, int i) {
    if (i < 1 || i > p.n) throw validation_error("unit vector index out of range");
    std::uint64_t place = 1;
    for (int j = 1; j < i; ++j) place *= static_cast<std::uint64_t>(p.q);
    return place;
}

// f_i = e_i + 1 = (1,...,1,0,1,...,1) with the 0 at coordinate i; q=2 only.
inline Vertex punctured_ones(const GraphParams& p, int i) {
    if (p.q != 2) throw validation_error("f_i vectors are defined for q = 2 only");
    return all_ones(p) ^ unit(p, i);
}

// Word string in coordinate order ("x1 x2 ... xn"); digits above 9 use a..z, A..Z+.
inline char digit_char(int v) {
    if (v < 10) return static_cast<char>('0' + v);
    if (v < 36) return static_cast<char>('a' + (v - 10));
    return static_cast<char>('A' + (v - 36));
}

inline int char_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    if (c >= 'A' && c <= 'Z') return c - 'A' + 36;
    return -1;
}

inline std::string word_string(const GraphParams& p, Vertex x) {
    auto coords = decode(p, x);
    std::string s;
    if (p.q <= 62) {
        s.reserve(coords.size());
        for (auto c : coords) s.push_back(digit_char(c));
    } else {
        // alphabets beyond the 62 digit symbols use dotted decimal digits
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s.push_back('.');
            s += std::to_string(static_cast<int>(coords[i]));
        }
    }
    return s;
}

inline Vertex parse_word(const GraphParams& p, const std::string& s) {
    std::vector<std::uint8_t> coords;
    if (s.find('.') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto next = s.find('.', pos);
            auto part = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            int v = 0;
            if (part.empty() || part.size() > 2) v = -1;
            for (char c : part) {
                if (c < '0' || c > '9') {
                    v = -1;
                    break;
                }
                v = v * 10 + (c - '0');
            }
            if (v < 0 || v >= p.q)
                throw validation_error("word '" + s + "' has a digit outside the alphabet");
            coords.push_back(static_cast<std::uint8_t>(v));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    } else {
        coords.reserve(s.size());
        for (char c : s) {
            int v = char_digit(c);
            if (v < 0 || v >= p.q)
                throw validation_error("word '" + s + "' has a digit outside the alphabet");
            coords.push_back(static_cast<std::uint8_t>(v));
        }
    }
    if (static_cast<int>(coords.size()) != p.n)
        throw validation_error("word '" + s + "' has wrong length for " + p.label());
    return encode(p, coords);
}

} // namespace hamgraph
