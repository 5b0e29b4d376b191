#pragma once

#include <array>
#include <optional>
#include <vector>

#include "homog/age.hpp"
#include "homog/constraints.hpp"

namespace homog {

// All structures agreeing with c except possibly on tuples whose range covers
// all of {a, b, c}: for a ternary-bounded vocabulary these are the
// reassignments of the one covering cell, drawn from the catalog.  Includes c
// itself.  Order follows the catalog.
std::vector<FinStructure> enumerate_neighbours(const FinStructure& c, std::array<int, 3> triple,
                                               const PatternCatalog& catalog);
std::vector<FinStructure> enumerate_neighbours(const FinStructure& c, std::array<int, 3> triple);

enum class IsolationVerdict { isolated, weakly_isolated, not_weakly_isolated };

struct IsolationReport {
    IsolationVerdict verdict = IsolationVerdict::not_weakly_isolated;
    // Triple at which every neighbour is forbidden (not_weakly_isolated), or
    // at which some proper neighbour is forbidden (weakly but not isolated).
    std::optional<std::array<int, 3>> witness_triple;
    std::optional<FinStructure> forbidden_neighbour;
    std::optional<FinStructure> permitted_neighbour;  // evidence for weak isolation
};

// Classification of a constraint: isolated when every proper neighbour at
// every distinct triple is permitted, weakly isolated when every triple has
// some permitted neighbour, otherwise a witness triple with all neighbours
// forbidden.
IsolationReport classify_isolation(const ConstraintRecord& c, const Age& age,
                                   Budget* budget = nullptr);

}  // namespace homog
