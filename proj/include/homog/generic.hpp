#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "homog/age.hpp"
#include "homog/qf_type.hpp"

namespace homog {

// One realized extension demand: the base subset, the demanded one-point type
// over it, and the full row of relation instances that attached the new
// vertex (so replay needs no search).
struct GrowthLogEntry {
    std::vector<int> base;  // ascending subset of the universe at that step
    QfType type;            // qf type of (base..., new)
    std::vector<std::pair<int, std::vector<int>>> row;  // (symbol, tuple) atoms through the new vertex
};

// Seeded finite approximation of the generic structure of an age.
struct GenericApprox {
    FinStructure structure;
    Age age;
    std::uint64_t seed = 0;
    int demand_bound = 3;
    std::vector<GrowthLogEntry> log;
};

// All one-point types over `base` realizable by a fresh element keeping the
// extended base substructure permitted; deduplicated, canonically ordered.
// The type describes atoms over (base ascending, new point).
std::vector<QfType> one_point_extensions(const Age& age, const FinStructure& s,
                                         std::vector<int> base, Budget* budget = nullptr);

// Grows `steps` vertices by round-robin demand realization: step t serves
// demand size t mod (bound+1), picks a seeded unmet (subset, type) demand of
// that size, and attaches a fresh vertex realizing it, completing the
// remaining cells by seeded backtracking over permitted completions.
// Deterministic in (age, steps, seed, demand_bound).
GenericApprox grow_generic(const Age& age, int steps, std::uint64_t seed, int demand_bound = 3,
                           Budget* budget = nullptr);

// Replays a growth log from the empty structure; with verify set, re-checks
// permittedness of every prefix.
FinStructure replay_log(const Age& age, const std::vector<GrowthLogEntry>& log,
                        bool verify = false, Budget* budget = nullptr);

struct ExtensionReport {
    std::uint64_t met = 0;
    std::uint64_t total = 0;
    double ratio() const { return total == 0 ? 1.0 : static_cast<double>(met) / static_cast<double>(total); }
};

// Fraction of (subset, permitted one-point type) demands of the given size
// already realized by some element of g; sample == 0 checks exhaustively.
// A confidence gauge, not a proof of saturation.
ExtensionReport check_extension_property(const GenericApprox& g, int demand_size, int sample,
                                         Budget* budget = nullptr);

struct RelativeExtensionResult {
    bool pass = false;
    std::optional<int> witness;  // the element b meeting every demand
};

// Extension check relative to an equivalence partition on a binary structure:
// demands are pairs (a_i, b_i) with every b_i in one class and b_i != a_i;
// pass iff some b has tp(a_i, b) = tp(a_i, b_i) for all i.
RelativeExtensionResult check_extension_relative_to_E(
    const FinStructure& s, const std::vector<std::vector<int>>& classes,
    const std::vector<std::pair<int, int>>& demands);

}  // namespace homog
