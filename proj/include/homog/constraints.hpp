#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homog/age.hpp"

namespace homog {

struct MinimalityWitness {
    int element = 0;
    bool deleted_permitted = false;
};

// A minimal forbidden structure: forbidden, with every one-element-deleted
// induced substructure permitted (re-checked when the record is built).
struct ConstraintRecord {
    FinStructure structure;
    std::vector<MinimalityWitness> witnesses;
};

ConstraintRecord make_constraint_record(const Age& age, const FinStructure& s,
                                        Budget* budget = nullptr);

struct ConstraintEnumeration {
    std::vector<ConstraintRecord> constraints;  // ordered by (size, canonical form)
    int completed_size = 0;                     // exhaustive through this size
    bool truncated = false;
};

// All constraints of the age with at most max_size elements, one per
// isomorphism class, by one-vertex extension of permitted representatives.
// Candidates are built cell by cell; a cell whose support is a proper subset
// of the universe is pruned unless its induced substructure is permitted
// (heredity makes this lossless).  Runs within the age's pattern catalog.
ConstraintEnumeration enumerate_constraints(const Age& age, int max_size,
                                            Budget* budget = nullptr);

// Permitted isomorphism-class representatives of exactly the given size,
// generated the same way.
std::vector<FinStructure> permitted_classes(const Age& age, int size, Budget* budget = nullptr);

// Visits every one-vertex extension of `parent` consistent with the age's
// catalog, pruning rows whose proper induced substructures are forbidden.
void for_each_one_point_extension(const Age& age, const FinStructure& parent,
                                  const std::function<void(const FinStructure&)>& visit,
                                  Budget* budget = nullptr);

// Greedy minimization of a forbidden structure: first deletes deletable
// non-protected elements (lowest index first, keeping the remainder
// forbidden), then deletable protected ones, and returns the resulting
// constraint.  The protected set's induced substructure must be permitted.
ConstraintRecord minimize_forbidden(const Age& age, const FinStructure& s,
                                    const std::vector<int>& protected_elements,
                                    Budget* budget = nullptr);

struct ArityLevelCheck {
    int k = 0;
    int constraint_count = 0;
    int largest = 0;   // largest constraint at this level (0 = none)
    bool ok = true;    // every constraint at this level has <= k elements
};

struct RandomAgeReport {
    bool random = false;
    std::vector<ArityLevelCheck> levels;
    // Mixed-arity signatures are checked level by level against the supplied
    // constraint list only; flagged so reports can say so.
    bool mixed_arity = false;
};

// Decides the bounded-constraint condition for a random structure from a
// constraint list the caller attests is complete: for each k, constraints
// whose relations all have arity <= k must have at most k elements.
RandomAgeReport is_random_age(const std::vector<ConstraintRecord>& constraints,
                              const Signature& sig);

enum class FactHypotheses { henson, conant };

struct FactViolation {
    std::string kind;        // "not-2-irreducible" | "not-3-irreducible" | "injective-homomorphism"
    int member_a = 0;
    int member_b = -1;       // second member for pairwise violations
    std::vector<int> witness;  // uncovered vertex set, or the offending map
};

struct FactReport {
    bool pass = false;          // the stated hypotheses hold
    bool variant_pass = false;  // with pairwise embedding-freeness in place of
                                // homomorphism-freeness (equals pass for henson)
    std::vector<FactViolation> violations;
    std::vector<FactViolation> variant_violations;
};

// henson: every member 2-irreducible.  conant: every member 3-irreducible and
// no injective homomorphism between distinct members; the report also carries
// the embedding-freeness variant of the pairwise condition.
FactReport check_fact_hypotheses(const std::vector<FinStructure>& forbidden,
                                 FactHypotheses which, Budget* budget = nullptr);

}  // namespace homog
