// Closed-form independence numbers, chromatic bound rules with provenance,
// and the Reed-Solomon clique construction.
//
// Every rule that contributes to a bound is recorded by name so the CLI can
// render an auditable table.  All arithmetic is exact; results that would not
// fit 64 bits raise validation errors instead of overflowing.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "graph.hpp"
#include "word.hpp"

namespace hamgraph {

struct AlphaResult {
    std::uint64_t value = 0;  // alpha itself when exact, otherwise an upper bound
    bool exact = false;
    std::string rule;
};

namespace detail {

inline std::uint64_t u128_to_u64(unsigned __int128 v, const char* what) {
    if (v > static_cast<unsigned __int128>(UINT64_MAX)) throw validation_error(what);
    return static_cast<std::uint64_t>(v);
}

} // namespace detail

// Independence number of H_q(n,d) = maximum anticode of diameter d-1.
//
//   q = 2 : Kleitman's exact values, sum of binomials by parity of d.
//   d = 2 : every maximal independent set is a line {v + a*e_j}, so alpha = q.
//   q >= 3: Frankl-Tokushige bound with r = floor((n-d)/(q-2)); exact when
//           d >= 2r+1, and also when d >= n-q+2 (where it equals q^{d-1}).
//
// The q >= 3 bound is kept verbatim even where it is slack (for d = 1 and
// n = 2q-1 it evaluates to 2 although alpha = 1); `exact` is the contract.
inline AlphaResult alpha_formula(const GraphParams& p) {
    AlphaResult out;
    if (p.q == 2) {
        unsigned __int128 acc = 0;
        if (p.d % 2 == 1) {
            for (int i = 0; i <= (p.d - 1) / 2; ++i) acc += detail::binomial(p.n, i);
            out.rule = "binary anticode count (odd d): sum_{i<=(d-1)/2} C(n,i)";
        } else {
            for (int i = 0; i <= (p.d - 2) / 2; ++i) acc += detail::binomial(p.n - 1, i);
            acc *= 2;
            out.rule = "binary anticode count (even d): 2*sum_{i<=(d-2)/2} C(n-1,i)";
        }
        out.value = detail::u128_to_u64(acc, "alpha exceeds 64 bits");
        out.exact = true;
        return out;
    }
    if (p.d == 2) {
        // a maximal set of pairwise distance <= 1 is a line along one coordinate
        out.value = static_cast<std::uint64_t>(p.q);
        out.exact = true;
        out.rule = "diameter-1 anticodes are lines: alpha = q";
        return out;
    }
    const int r = (p.n - p.d) / (p.q - 2);
    unsigned __int128 sum = 0;
    for (int i = 0; i <= r; ++i)
        sum += static_cast<unsigned __int128>(detail::binomial(p.n - p.d + 1 + 2 * r, i)) *
               static_cast<unsigned __int128>(detail::ipow(static_cast<std::uint64_t>(p.q - 1), i));
    const int e = p.d - 1 - 2 * r;
    unsigned __int128 value;
    if (e >= 0)
        value = sum * static_cast<unsigned __int128>(detail::ipow(static_cast<std::uint64_t>(p.q), e));
    else
        value = sum / static_cast<unsigned __int128>(detail::ipow(static_cast<std::uint64_t>(p.q), -e));
    out.value = detail::u128_to_u64(value, "alpha bound exceeds 64 bits");
    out.exact = (p.d >= 2 * r + 1) || (p.d >= p.n - p.q + 2);
    out.rule = out.exact ? "q-ary anticode bound, tight regime"
                         : "q-ary anticode bound (upper bound only)";
    return out;
}

// Every minimal coloring is forced even exactly when alpha = q^{d-1}: color
// classes of a q^{n-d+1}-coloring then have nowhere to grow.
inline bool evenness_forced(const GraphParams& p) {
    auto alpha = alpha_formula(p);
    return alpha.exact && alpha.value == detail::ipow(static_cast<std::uint64_t>(p.q), p.d - 1);
}

struct BoundRule {
    std::string kind; // "lower" | "upper" | "exact" | "note"
    std::uint64_t value = 0;
    std::string name;
};

struct BoundReport {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::optional<std::uint64_t> exact;
    std::vector<BoundRule> rules;
};

namespace detail {

inline bool is_clique(const GraphParams& p, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (distance(p, vs[i], vs[j]) < p.d) return false;
    return true;
}

inline bool is_anticode(const GraphParams& p, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (distance(p, vs[i], vs[j]) >= p.d) return false;
    return true;
}

} // namespace detail

// Chromatic-number bounds assembled from closed-form rules plus optional
// certificates.  A clique raises the lower bound; an independent set is
// validated and recorded (it certifies alpha, not chi).
inline BoundReport chi_bounds(const GraphParams& p,
                              const std::optional<std::vector<Vertex>>& clique = std::nullopt,
                              const std::optional<std::vector<Vertex>>& independent_set = std::nullopt) {
    BoundReport report;
    const std::uint64_t vcount = p.vertex_count();
    const std::uint64_t k_coord = detail::ipow(static_cast<std::uint64_t>(p.q), p.n - p.d + 1);

    report.upper = k_coord;
    report.rules.push_back({"upper", k_coord, "coordinate coloring uses q^{n-d+1} colors"});

    const auto alpha = alpha_formula(p);
    const std::uint64_t count_lower = (vcount + alpha.value - 1) / alpha.value;
    report.lower = count_lower;
    report.rules.push_back(
        {"lower", count_lower, "counting: ceil(q^n / alpha) with " + alpha.rule});

    auto claim_exact = [&](std::uint64_t value, const std::string& name) {
        report.rules.push_back({"exact", value, name});
        if (report.exact && *report.exact != value)
            throw std::logic_error("inconsistent exactness rules for " + p.label());
        report.exact = value;
    };

    if (p.d == 1) claim_exact(vcount, "complete graph: chi = q^n");
    if (p.q == 2 && p.d == p.n - 1)
        claim_exact(4, "Payan: nonbipartite cube-like graphs need 4 colors; 4 suffice");
    if (p.d == 2) claim_exact(detail::ipow(static_cast<std::uint64_t>(p.q), p.n - 1),
                              "distance 2: alpha = q forces chi = q^{n-1}");
    if (p.q >= 3 && p.d >= p.n - p.q + 2)
        claim_exact(k_coord, "tight anticode regime (q >= 3, d >= n-q+2): chi = q^{n-d+1}");
    if (k_coord > 1) {
        const std::uint64_t threshold = (vcount + k_coord - 2) / (k_coord - 1);
        if (alpha.value < threshold)
            claim_exact(k_coord, "sufficiency: alpha < ceil(q^n/(q^{n-d+1}-1))");
    }

    if (clique) {
        if (!detail::is_clique(p, *clique))
            throw validation_error("clique certificate is not a clique (some pair closer than d)");
        const auto size = static_cast<std::uint64_t>(clique->size());
        report.rules.push_back({"lower", size, "clique certificate of size " + std::to_string(size)});
        report.lower = std::max(report.lower, size);
    }
    if (independent_set) {
        if (!detail::is_anticode(p, *independent_set))
            throw validation_error("independent-set certificate is not independent");
        const auto size = static_cast<std::uint64_t>(independent_set->size());
        report.rules.push_back(
            {"note", size, "independent-set certificate: alpha >= " + std::to_string(size)});
    }

    if (report.exact) {
        report.lower = std::max(report.lower, *report.exact);
        report.upper = std::min(report.upper, *report.exact);
    }
    if (report.lower == report.upper && !report.exact) {
        claim_exact(report.lower, "bounds meet");
    }
    if (report.lower > report.upper)
        throw std::logic_error("bound rules crossed for " + p.label());
    return report;
}

inline nlohmann::json bound_report_to_json(const BoundReport& report) {
    nlohmann::json j;
    j["lower"] = report.lower;
    j["upper"] = report.upper;
    if (report.exact)
        j["exact"] = *report.exact;
    else
        j["exact"] = nullptr;
    auto rules = nlohmann::json::array();
    for (const auto& r : report.rules)
        rules.push_back({{"kind", r.kind}, {"value", r.value}, {"rule", r.name}});
    j["rules"] = std::move(rules);
    return j;
}

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

// Reed-Solomon style clique: evaluate all polynomials of degree < n-d+1 over
// the prime field F_q at n distinct points.  Distinct polynomials agree on at
// most n-d points, so the q^{n-d+1} words form a clique in H_q(n,d).
// Requires n <= q (enough evaluation points); returns nothing otherwise.
inline std::optional<std::vector<Vertex>> mds_clique(const GraphParams& p) {
    if (!is_prime(p.q)) throw validation_error("MDS clique construction requires prime q");
    if (p.n > p.q) return std::nullopt;
    const int k = p.n - p.d + 1;
    const std::uint64_t count = detail::ipow(static_cast<std::uint64_t>(p.q), k);
    std::vector<Vertex> words;
    words.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t poly = 0; poly < count; ++poly) {
        // coefficients of the polynomial, little-endian base q
        std::vector<int> coeff(static_cast<std::size_t>(k));
        std::uint64_t rest = poly;
        for (int i = 0; i < k; ++i) {
            coeff[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(p.q));
            rest /= static_cast<std::uint64_t>(p.q);
        }
        std::vector<std::uint8_t> digits(static_cast<std::size_t>(p.n));
        for (int point = 0; point < p.n; ++point) {
            int value = 0;
            for (int i = k - 1; i >= 0; --i)
                value = (value * point + coeff[static_cast<std::size_t>(i)]) % p.q;
            digits[static_cast<std::size_t>(point)] = static_cast<std::uint8_t>(value);
        }
        words.push_back(encode(p, digits));
    }
    std::sort(words.begin(), words.end());
    if (!detail::is_clique(p, words))
        throw std::logic_error("constructed evaluation code failed the clique check: bug");
    return words;
}

} // namespace hamgraph
