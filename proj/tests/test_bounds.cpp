#include <catch2/catch_amalgamated.hpp>

#include "hamgraph/bounds.hpp"
#include "hamgraph/graph.hpp"

using namespace hamgraph;

namespace {

// Test-only independent-set maximizer: plain include/exclude recursion over
// the vertex list, adjacency pruning only.
std::uint64_t brute_mis(const GraphParams& p) {
    const auto count = p.vertex_count();
    std::vector<Vertex> chosen;
    std::uint64_t best = 0;
    auto recurse = [&](auto&& self, Vertex next) -> void {
        best = std::max<std::uint64_t>(best, chosen.size());
        if (next == count) return;
        if (chosen.size() + (count - next) <= best) return;
        bool compatible = true;
        for (Vertex u : chosen)
            if (distance(p, u, next) >= p.d) {
                compatible = false;
                break;
            }
        if (compatible) {
            chosen.push_back(next);
            self(self, next + 1);
            chosen.pop_back();
        }
        self(self, next + 1);
    };
    recurse(recurse, 0);
    return best;
}

} // namespace

TEST_CASE("binary independence numbers") {
    auto a = alpha_formula(GraphParams(2, 4, 3));
    CHECK(a.value == 5);
    CHECK(a.exact);
    auto b = alpha_formula(GraphParams(2, 3, 2));
    CHECK(b.value == 2);
    CHECK(b.exact);
    CHECK(alpha_formula(GraphParams(2, 6, 4)).value == 12);
    CHECK(alpha_formula(GraphParams(2, 8, 7)).value == 93);
    CHECK(alpha_formula(GraphParams(2, 5, 3)).value == 6);
}

TEST_CASE("q-ary independence bound") {
    auto a = alpha_formula(GraphParams(3, 5, 3));
    CHECK(a.value == 11);
    CHECK_FALSE(a.exact);
    auto b = alpha_formula(GraphParams(3, 4, 3)); // d >= n-q+2
    CHECK(b.value == 9);
    CHECK(b.exact);
    auto c = alpha_formula(GraphParams(3, 5, 4));
    CHECK(c.value == 27);
    CHECK(c.exact);
}

TEST_CASE("distance-2 independence is exact for every q") {
    for (int q : {2, 3, 5, 7}) {
        for (int n : {3, 4, 5}) {
            auto a = alpha_formula(GraphParams(q, n, 2));
            CHECK(a.value == static_cast<std::uint64_t>(q));
            CHECK(a.exact);
        }
    }
}

TEST_CASE("degenerate bound at (q, 2q-1, 1) stays a non-exact bound") {
    auto a = alpha_formula(GraphParams(3, 5, 1));
    CHECK(a.value == 2);
    CHECK_FALSE(a.exact);
    auto b = alpha_formula(GraphParams(5, 9, 1));
    CHECK(b.value == 2);
    CHECK_FALSE(b.exact);
}

TEST_CASE("alpha formula agrees with plain brute force where exact") {
    for (const auto& p :
         {GraphParams(2, 3, 2), GraphParams(2, 4, 2), GraphParams(2, 4, 3), GraphParams(2, 5, 4),
          GraphParams(3, 3, 2), GraphParams(2, 5, 3)}) {
        auto a = alpha_formula(p);
        REQUIRE(a.exact);
        INFO(p.label());
        CHECK(a.value == brute_mis(p));
    }
}

TEST_CASE("evenness forcing") {
    CHECK(evenness_forced(GraphParams(3, 4, 3)));
    CHECK_FALSE(evenness_forced(GraphParams(2, 4, 3))); // alpha = 5 > 4
    for (int q : {2, 3, 4, 5})
        for (int n : {3, 4}) CHECK(evenness_forced(GraphParams(q, n, 2)));
}

TEST_CASE("chi bounds: exact rules") {
    auto h254 = chi_bounds(GraphParams(2, 5, 4));
    REQUIRE(h254.exact.has_value());
    CHECK(*h254.exact == 4);

    auto h343 = chi_bounds(GraphParams(3, 4, 3));
    REQUIRE(h343.exact.has_value());
    CHECK(*h343.exact == 9);

    auto h242 = chi_bounds(GraphParams(2, 4, 2));
    REQUIRE(h242.exact.has_value());
    CHECK(*h242.exact == 8);

    auto complete = chi_bounds(GraphParams(3, 2, 1));
    REQUIRE(complete.exact.has_value());
    CHECK(*complete.exact == 9);

    auto h332 = chi_bounds(GraphParams(3, 3, 2));
    REQUIRE(h332.exact.has_value());
    CHECK(*h332.exact == 9);
}

TEST_CASE("chi bounds: open cases stay open") {
    auto h264 = chi_bounds(GraphParams(2, 6, 4));
    CHECK(h264.lower == 6); // ceil(64/12)
    CHECK(h264.upper == 8);
    CHECK_FALSE(h264.exact.has_value());

    auto h253 = chi_bounds(GraphParams(2, 5, 3));
    CHECK(h253.lower == 6);
    CHECK(h253.upper == 8);
    CHECK_FALSE(h253.exact.has_value());
}

TEST_CASE("chi bound provenance is recorded") {
    auto report = chi_bounds(GraphParams(3, 4, 3));
    bool has_upper = false, has_lower = false, has_sufficiency = false;
    for (const auto& rule : report.rules) {
        has_upper |= rule.kind == "upper";
        has_lower |= rule.kind == "lower";
        has_sufficiency |= rule.name.find("sufficiency") != std::string::npos;
    }
    CHECK(has_upper);
    CHECK(has_lower);
    CHECK(has_sufficiency);
    auto j = bound_report_to_json(report);
    CHECK(j["rules"].size() == report.rules.size());
    CHECK(j["exact"] == 9);
}

TEST_CASE("certificates") {
    GraphParams p(3, 3, 2);
    auto clique = mds_clique(p);
    REQUIRE(clique.has_value());
    CHECK(clique->size() == 9);
    auto report = chi_bounds(p, clique);
    CHECK(report.lower == 9);

    std::vector<Vertex> bogus{0, 1}; // distance 1 < d is fine for an anticode, not a clique
    CHECK_THROWS_AS(chi_bounds(p, bogus), validation_error);
    std::vector<Vertex> line{0, 1, 2};
    CHECK_NOTHROW(chi_bounds(p, std::nullopt, line));
    std::vector<Vertex> not_independent{0, parse_word(p, "111")};
    CHECK_THROWS_AS(chi_bounds(p, std::nullopt, not_independent), validation_error);
}

TEST_CASE("MDS cliques") {
    auto t = mds_clique(GraphParams(3, 3, 2));
    REQUIRE(t.has_value());
    CHECK(t->size() == 9);
    for (std::size_t i = 0; i < t->size(); ++i)
        for (std::size_t j = i + 1; j < t->size(); ++j)
            CHECK(distance(GraphParams(3, 3, 2), (*t)[i], (*t)[j]) >= 2);

    auto big = mds_clique(GraphParams(5, 4, 3));
    REQUIRE(big.has_value());
    CHECK(big->size() == 25);
    for (std::size_t i = 0; i < big->size(); ++i)
        for (std::size_t j = i + 1; j < big->size(); ++j)
            CHECK(distance(GraphParams(5, 4, 3), (*big)[i], (*big)[j]) >= 3);

    auto k4 = mds_clique(GraphParams(2, 2, 1));
    REQUIRE(k4.has_value());
    CHECK(k4->size() == 4);

    CHECK_THROWS_AS(mds_clique(GraphParams(4, 3, 2)), validation_error); // q not prime
    CHECK_FALSE(mds_clique(GraphParams(3, 4, 3)).has_value());           // n > q
}
