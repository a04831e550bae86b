#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>

namespace singlab {

/// Ordered triple of non-negative exponents; indexes Hermite-type modes
/// and monomials y1^a y2^b y3^c.
struct MultiIndex {
    std::array<int, 3> e{0, 0, 0};

    int order() const { return e[0] + e[1] + e[2]; }
    int operator[](int i) const { return e[static_cast<size_t>(i)]; }
    int& operator[](int i) { return e[static_cast<size_t>(i)]; }

    MultiIndex bumped(int dir, int delta) const {
        MultiIndex m = *this;
        m.e[static_cast<size_t>(dir)] += delta;
        return m;
    }

    auto operator<=>(const MultiIndex&) const = default;

    std::string str() const {
        return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," +
               std::to_string(e[2]) + ")";
    }
};

}  // namespace singlab
