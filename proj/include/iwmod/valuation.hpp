#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>

namespace iwmod {

/// Extended integer returned by valuation queries: either an exact value or the
/// marker "≥ bound" when the answer lies beyond the available precision.
struct Valuation {
    int value = 0;
    bool at_least = false;

    static constexpr Valuation exact(int v) { return {v, false}; }
    static constexpr Valuation lower_bound(int v) { return {v, true}; }

    constexpr bool determined() const { return !at_least; }

    friend constexpr bool operator==(const Valuation&, const Valuation&) = default;

    std::string to_string() const {
        return at_least ? ">= " + std::to_string(value) : std::to_string(value);
    }
};

inline constexpr Valuation operator+(Valuation a, Valuation b) {
    return {a.value + b.value, a.at_least || b.at_least};
}

/// Order of a finite p-group written as p^exponent, possibly a lower bound.
struct PPower {
    std::int64_t p = 0;
    int exponent = 0;
    bool at_least = false;

    friend constexpr bool operator==(const PPower&, const PPower&) = default;

    /// Integer value; only meaningful when it fits in 64 bits.
    std::int64_t value() const {
        std::int64_t r = 1;
        for (int i = 0; i < exponent; ++i) r *= p;
        return r;
    }

    std::string to_string() const {
        std::string s = exponent == 0 ? "1" : std::to_string(p) + "^" + std::to_string(exponent);
        return at_least ? ">= " + s : s;
    }
};

}  // namespace iwmod
