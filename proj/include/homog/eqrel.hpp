#pragma once

#include <vector>

#include "homog/budget.hpp"
#include "homog/qf_type.hpp"

namespace homog {

// A candidate definable equivalence relation: a transpose-closed union of
// complete quantifier-free 2-types over the parameters that happens to be
// transitive on the approximation.  Finite evidence only; transitivity on a
// small structure proves nothing about a larger one.
struct EquivalenceCandidate {
    std::vector<QfType> types;               // the unioned 2-types, sorted
    std::vector<std::vector<int>> classes;   // induced partition of the realization set
};

struct EqrelReport {
    std::vector<int> realization;            // elements realizing p outside the parameters
    std::vector<QfType> realized_pair_types; // complete qf 2-types over params seen on the set
    std::vector<EquivalenceCandidate> candidates;
};

// Enumerates every transpose-closed union of realized 2-types over the
// parameters within the realization set of p, returning those which are
// reflexive-closed, symmetric and transitive on the approximation and
// nontrivial (at least two classes, some class of size >= 2).  The type of x
// over the parameters is the qf type of (params..., x); p must be realized by
// at least four elements outside the parameters.
EqrelReport search_definable_equivalence(const FinStructure& s, const std::vector<int>& params,
                                         const QfType& p, Budget* budget = nullptr);

}  // namespace homog
