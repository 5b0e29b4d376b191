#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "homog/structure.hpp"

namespace homog {

// Permutations of {0..r-1} in lexicographic order.
const std::vector<std::vector<int>>& permutations_of(int r);

// A "cell" is an unordered support of r vertices together with the joint
// interpretation of every arity-r symbol on it.  CellPattern captures that
// interpretation relative to the ascending ordering of the support: one
// bitmask per arity-r symbol, bit p = tuple obtained by applying the p-th
// permutation to the sorted support.  Symmetric symbols use only bit 0.
struct CellPattern {
    int arity = 0;
    std::vector<std::uint32_t> masks;  // one per symbol of this arity, signature order

    bool operator==(const CellPattern&) const = default;
};

// Enumerable space of cell patterns per arity.  By default every
// symmetry-respecting pattern is allowed; an arity may be restricted to an
// explicit list, which models classes that only ever interpret their symbols
// in a fixed family of local shapes (the convention under which structures
// with other local shapes are ignored rather than treated as forbidden).
class PatternCatalog {
public:
    PatternCatalog() = default;
    explicit PatternCatalog(const Signature& sig);

    static PatternCatalog standard(const Signature& sig) { return PatternCatalog(sig); }

    void restrict_arity(int r, std::vector<CellPattern> allowed);
    bool restricted(int r) const;

    // Number of arity-r symbols in the signature.
    bool has_arity(int r) const;
    const std::vector<int>& symbols_of_arity(int r) const;

    std::uint64_t pattern_count(int r) const;
    CellPattern pattern(int r, std::uint64_t index) const;

    // Index of a pattern in enumeration order (used to identify a structure's
    // current cell among the candidates).
    std::uint64_t index_of(int r, const CellPattern& p) const;

    const Signature& signature() const { return sig_; }

    // Current pattern of s on the sorted support.
    CellPattern read(const FinStructure& s, std::span<const int> support) const;
    // Overwrite the cell of s on the sorted support with p.
    void write(FinStructure& s, std::span<const int> support, const CellPattern& p) const;

private:
    std::uint64_t free_bits(int r) const;

    Signature sig_;
    std::vector<std::vector<int>> by_arity_;                 // arity -> symbol indices
    std::vector<std::vector<CellPattern>> restricted_;       // arity -> explicit list (empty = free)
    std::vector<bool> is_restricted_;
};

}  // namespace homog
