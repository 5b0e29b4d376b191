#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "homog/age.hpp"
#include "homog/structure.hpp"

namespace homog {

// Tournaments are complete antisymmetric binary structures over {"E"}.
bool is_tournament(const FinStructure& t);

// Seeded uniform orientation of every pair; deterministic in (n, seed).
FinStructure random_tournament(int n, std::uint64_t seed);

// Ternary vocabulary for the reduct: each ordered distinct triple belongs to
// exactly one of four reversal classes:
//   R1: the two orientations of a cyclic triple (all six orderings),
//   R2: (source, middle, sink) of a transitive triple, and its reverse,
//   R3: (source, sink, middle) and its reverse,
//   R4: (middle, source, sink) and its reverse.
Signature reduct_signature();

// Class index (0..3, in R1..R4 order) of the ordered distinct triple (a,b,c).
int triple_class(const FinStructure& t, int a, int b, int c);

// Equality of tuples up to matching equality patterns and edge patterns,
// directly or under global edge reversal.  Tuple lengths must agree and be
// at least 2.
bool approx_n_equal(const FinStructure& t, std::span<const int> u, std::span<const int> v);

// The reduct structure assigning every ordered distinct triple to its class.
FinStructure tournament_reduct(const FinStructure& t);

// Permittedness by lifting: a structure over reduct_signature() is permitted
// iff some tournament on the same universe maps onto it via
// tournament_reduct.  Decided by orientation backtracking with per-triple
// class checks; universes up to 7 vertices.
class TournamentLiftOracle : public PermittednessOracle {
public:
    bool permitted(const FinStructure& s, Budget* budget) const override;
    int max_decidable_size() const override { return 7; }
    std::string kind() const override { return "tournament-reduct"; }

    // Lowest-encoding witness tournament, when one exists.
    static std::optional<FinStructure> lift(const FinStructure& s, Budget* budget = nullptr);
};

// The age of the reduct: lifting oracle plus the catalog of the four local
// triple shapes (structures with any other triple shape never arise as
// reducts and are left out of enumeration).
Age tournament_reduct_age();

}  // namespace homog
