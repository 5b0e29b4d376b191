#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homog/budget.hpp"
#include "homog/cells.hpp"
#include "homog/morphism.hpp"
#include "homog/structure.hpp"

namespace homog {

// External permittedness test, used where a class has no forbidden-set
// presentation (reducts decided by lifting, ages of a fixed finite structure).
class PermittednessOracle {
public:
    virtual ~PermittednessOracle() = default;
    virtual bool permitted(const FinStructure& s, Budget* budget) const = 0;
    virtual int max_decidable_size() const = 0;
    virtual std::string kind() const = 0;
};

// Age of structures permitted by a forbidden set under a morphism mode, or by
// an oracle when present.  With mode == embedding this is the class of
// structures containing no induced copy of a forbidden member; with
// injective_homomorphism a non-induced injective image already disqualifies.
// The forbidden set is normalized on construction: deduplicated up to
// isomorphism and pruned so that no member maps into another under the mode.
class Age {
public:
    Age() = default;
    Age(Signature sig, MorphismMode mode, std::vector<FinStructure> forbidden,
        std::shared_ptr<const PermittednessOracle> oracle = nullptr);

    const Signature& signature() const { return sig_; }
    MorphismMode mode() const { return mode_; }
    const std::vector<FinStructure>& forbidden() const { return forbidden_; }
    const PermittednessOracle* oracle() const { return oracle_.get(); }
    std::shared_ptr<const PermittednessOracle> oracle_ptr() const { return oracle_; }

    const PatternCatalog& catalog() const { return catalog_; }
    void set_catalog(PatternCatalog c) { catalog_ = std::move(c); }

    bool is_permitted(const FinStructure& s, Budget* budget = nullptr) const;

    // Cell patterns that are permitted as standalone r-vertex structures.
    // Cached; used to prune generation through proper substructures.
    const std::vector<std::uint64_t>& locally_permitted_patterns(int r) const;

private:
    Signature sig_;
    MorphismMode mode_ = MorphismMode::embedding;
    std::vector<FinStructure> forbidden_;
    std::shared_ptr<const PermittednessOracle> oracle_;
    PatternCatalog catalog_;
    mutable std::vector<std::vector<std::uint64_t>> local_cache_;
    mutable std::vector<bool> local_cache_ready_;
};

// Oracle accepting exactly the structures that embed into a fixed target.
// Small probes recur constantly during enumeration, so verdicts are cached by
// labeled encoding.
class EmbedsIntoOracle : public PermittednessOracle {
public:
    explicit EmbedsIntoOracle(FinStructure target) : target_(std::move(target)) {}
    bool permitted(const FinStructure& s, Budget* budget) const override;
    int max_decidable_size() const override { return target_.size(); }
    std::string kind() const override { return "embeds-into"; }
    const FinStructure& target() const { return target_; }

private:
    FinStructure target_;
    mutable std::map<std::string, bool> cache_;
};

inline Age forbidden_age(Signature sig, std::vector<FinStructure> forbidden,
                         MorphismMode mode = MorphismMode::embedding) {
    return Age(std::move(sig), mode, std::move(forbidden));
}

// Sorted hyperedge counts of the forbidden members when the age is a single
// symmetric ternary symbol whose members all have 4 vertices; on a 4-set the
// count determines the isomorphism class, so membership checks reduce to
// counting quadruples.  nullopt when the shape does not apply.
std::optional<std::vector<int>> forbidden_quadruple_counts(const Age& age);

}  // namespace homog
