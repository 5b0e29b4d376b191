#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "homog/structure.hpp"

namespace homog {

// Canonical quantifier-free type of a tuple: the equality pattern on its
// positions plus every atomic relation that holds between the referenced
// elements, recorded as (symbol, position-tuple) pairs.  Two tuples of the
// same structure get equal QfType values exactly when no quantifier-free
// formula tells them apart.
struct QfType {
    int arity = 0;
    std::vector<int> eq_pattern;                         // eq_pattern[i] = min j with t[j] == t[i]
    std::vector<std::pair<int, TupleCode>> atoms;        // sorted (symbol, packed position tuple)

    auto operator<=>(const QfType&) const = default;

    // Stable byte encoding, usable as a map key.
    std::string encode() const;
};

QfType qf_type(const FinStructure& s, std::span<const int> tuple);
inline QfType qf_type(const FinStructure& s, std::initializer_list<int> tuple) {
    return qf_type(s, std::span<const int>(tuple.begin(), tuple.size()));
}

}  // namespace homog
