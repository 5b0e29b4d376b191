#pragma once

#include <string>
#include <vector>

#include "homog/structure.hpp"

namespace homog {

// Total-order key for the isomorphism class of a structure: equal bytes
// exactly when two structures over the same signature are isomorphic.
struct CanonicalForm {
    std::string bytes;

    auto operator<=>(const CanonicalForm&) const = default;
    std::string hex() const;
};

struct CanonicalResult {
    CanonicalForm form;
    std::vector<int> labeling;                     // labeling[v] = canonical label
    std::vector<std::vector<int>> automorphisms;   // generators found during the search
};

// Lexicographically least relabeled encoding, searched by individualization
// and refinement with orbit pruning from discovered automorphisms.
CanonicalResult canonicalize(const FinStructure& s);
CanonicalForm canonical_form(const FinStructure& s);

// Encoding of a labeled structure as-is (no relabeling).
std::string labeled_encoding(const FinStructure& s);

bool isomorphic(const FinStructure& a, const FinStructure& b);

}  // namespace homog
