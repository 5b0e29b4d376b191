#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homog/age.hpp"

namespace homog {

enum class AmalgamKind { free, disjoint, general };

struct AmalgamCounterexample {
    FinStructure a;
    FinStructure b;
    FinStructure overlap;                              // induced shared part
    std::vector<std::pair<int, int>> identification;   // (vertex of a, vertex of b)
    FinStructure amalgam;                              // the forbidden free amalgam (free kind)
};

struct AmalgamReport {
    enum class Verdict { pass, counterexample, truncated };
    Verdict verdict = Verdict::pass;
    int verified_through = 0;  // every instance with |A u B| <= this was checked
    std::optional<AmalgamCounterexample> witness;
};

// Checks the amalgamation property of the given kind over all permitted pairs
// (A, B) sharing an identified permitted overlap, |A u B| <= max_union.
//   free     - the free amalgam itself must be permitted
//   disjoint - some completion on A u B must be permitted
//   general  - some completion after identifying elements across the two sides
// For forbidden-list ages in embedding mode the free check reduces exactly to
// 2-irreducibility of the members (a member failing it splits into two proper
// permitted pieces whose free amalgam is the member); other ages are searched
// instance by instance within the budget.
AmalgamReport check_amalgamation(const Age& age, AmalgamKind kind, int max_union,
                                 Budget* budget = nullptr);

}  // namespace homog
