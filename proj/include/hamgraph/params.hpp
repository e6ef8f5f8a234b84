// Validated (q,n,d) parameter triples for Hamming-distance graphs H_q(n,d).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hamgraph {

// Thrown on any precondition violation (bad parameters, malformed input,
// infeasible materialization request).  The CLI maps it to exit code 2.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameter triple of a Hamming-distance graph H_q(n,d): words of length n
// over an alphabet of size q, adjacency = Hamming distance >= d.
// Valid iff q >= 2, n >= 2, 0 < d <= n and (q,d) != (2,n); the excluded
// (2,n) case is a disjoint union of 2^(n-1) single edges.
struct GraphParams {
    int q = 2;
    int n = 2;
    int d = 1;

    GraphParams() = default;

    GraphParams(int q_, int n_, int d_) : q(q_), n(n_), d(d_) {
        if (q < 2) throw validation_error("alphabet size q must be at least 2");
        if (q > 64) throw validation_error("alphabet size q above 64 is unsupported");
        if (n < 2) throw validation_error("word length n must be at least 2");
        if (n > 64) throw validation_error("word length n above 64 is unsupported");
        if (d < 1 || d > n) throw validation_error("distance threshold d must satisfy 0 < d <= n");
        if (q == 2 && d == n)
            throw validation_error("parameters (q,d)=(2,n) are excluded: H_2(n,n) is a perfect matching");
    }

    bool operator==(const GraphParams&) const = default;

    bool binary() const { return q == 2; }

    // q^n, guarded against 64-bit overflow.
    std::uint64_t vertex_count() const {
        std::uint64_t v = 1;
        for (int i = 0; i < n; ++i) {
            if (v > (UINT64_MAX >> 1) / static_cast<std::uint64_t>(q))
                throw validation_error("q^n does not fit in 64 bits");
            v *= static_cast<std::uint64_t>(q);
        }
        return v;
    }

    std::string label() const {
        return "H_" + std::to_string(q) + "(" + std::to_string(n) + "," + std::to_string(d) + ")";
    }
};

} // namespace hamgraph
