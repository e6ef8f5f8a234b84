// Minimal exact fraction type; robustness values must never touch floating point.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hamgraph {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;

    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        auto g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rational&) const = default;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

} // namespace hamgraph
