#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homog/budget.hpp"
#include "homog/structure.hpp"

namespace homog {

enum class MorphismMode {
    embedding,                // preserves relations and non-relations (induced copy)
    injective_homomorphism,   // preserves relations only
};

// Injective map a -> b whose image is an induced copy of a, or nullopt.
// Backtracking with per-symbol degree pruning; the returned map is the first
// one in deterministic search order.
std::optional<std::vector<int>> find_embedding(const FinStructure& a, const FinStructure& b,
                                               Budget* budget = nullptr);

// Injective map preserving relations only (non-relations may gain relations).
std::optional<std::vector<int>> find_injective_homomorphism(const FinStructure& a,
                                                            const FinStructure& b,
                                                            Budget* budget = nullptr);

std::optional<std::vector<int>> find_morphism(const FinStructure& a, const FinStructure& b,
                                              MorphismMode mode, Budget* budget = nullptr);

// Like find_morphism but only maps whose image contains every vertex listed in
// `required` count.  Used for incremental checks localized at fresh vertices.
bool morphism_exists_covering(const FinStructure& a, const FinStructure& b, MorphismMode mode,
                              std::span<const int> required, Budget* budget = nullptr);

// Every morphism a -> b of the given mode, in deterministic order.
std::vector<std::vector<int>> all_morphisms(const FinStructure& a, const FinStructure& b,
                                            MorphismMode mode, Budget* budget = nullptr);

// Free amalgam of a and b over the identification `overlap` (pairs of
// (vertex of a, vertex of b) inducing identical substructures).  The result
// keeps a's labels 0..|a|-1 and appends b's non-identified vertices in
// ascending b order; a tuple holds iff it holds in a or in b.
FinStructure free_amalgam(const FinStructure& a, const FinStructure& b,
                          const std::vector<std::pair<int, int>>& overlap);

// The embedding of b into free_amalgam(a, b, overlap) induced by the
// identification (a embeds as the identity).
std::vector<int> free_amalgam_b_map(const FinStructure& a, const FinStructure& b,
                                    const std::vector<std::pair<int, int>>& overlap);

}  // namespace homog
