#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "homog/signature.hpp"

namespace homog {

// Tuples are short (arity <= 8) and get packed into a u64, one byte per entry
// storing value+1.  Vertices are 0-based, so universes are capped at 255.
using TupleCode = std::uint64_t;

inline TupleCode encode_tuple(std::span<const int> t) {
    TupleCode c = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        c |= (static_cast<TupleCode>(t[i]) + 1) << (8 * i);
    return c;
}

inline std::vector<int> decode_tuple(TupleCode c, int arity) {
    std::vector<int> t(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i)
        t[static_cast<std::size_t>(i)] = static_cast<int>((c >> (8 * i)) & 0xff) - 1;
    return t;
}

inline bool tuple_entries_distinct(std::span<const int> t) {
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] == t[j]) return false;
    return true;
}

// A finite relational structure over {0,...,n-1}.  All relation instances are
// tuples of pairwise-distinct elements; symmetric symbols keep one sorted
// representative per orbit.  Relation sets are kept sorted, which makes
// labeled equality plain vector equality.
class FinStructure {
public:
    FinStructure() = default;
    FinStructure(Signature sig, int n);

    const Signature& signature() const { return sig_; }
    int size() const { return n_; }

    // Membership; for symmetric symbols any ordering of the orbit works.
    bool has(int symbol, std::span<const int> tuple) const;
    void add(int symbol, std::span<const int> tuple);
    void add(int symbol, std::initializer_list<int> tuple) {
        add(symbol, std::span<const int>(tuple.begin(), tuple.size()));
    }
    bool has(int symbol, std::initializer_list<int> tuple) const {
        return has(symbol, std::span<const int>(tuple.begin(), tuple.size()));
    }
    void remove(int symbol, std::span<const int> tuple);
    void remove(int symbol, std::initializer_list<int> tuple) {
        remove(symbol, std::span<const int>(tuple.begin(), tuple.size()));
    }

    // Merge many tuples into one relation in a single sort+unique pass; far
    // cheaper than repeated add() when attaching whole rows.
    void merge_tuples(int symbol, const std::vector<std::vector<int>>& tuples);

    // Stored representatives (sorted code order).  For a symmetric symbol this
    // is one tuple per orbit; otherwise every tuple.
    const std::vector<TupleCode>& stored(int symbol) const {
        return rels_[static_cast<std::size_t>(symbol)];
    }
    std::size_t stored_count(int symbol) const { return stored(symbol).size(); }

    // All tuples with the orbit of each symmetric representative expanded.
    std::vector<std::vector<int>> expanded_tuples(int symbol) const;

    std::size_t total_stored() const;

    // Substructure induced on `subset` (need not be sorted; duplicates and
    // out-of-range entries are input errors).  The universe is relabeled to
    // 0..|subset|-1 preserving ascending order of the original labels.
    FinStructure induced(std::span<const int> subset) const;
    FinStructure induced(std::initializer_list<int> subset) const {
        return induced(std::span<const int>(subset.begin(), subset.size()));
    }

    // Image under a bijective relabeling perm: vertex v becomes perm[v].
    FinStructure relabeled(std::span<const int> perm) const;

    // Per-symbol count of stored tuples through a vertex.
    std::vector<int> degree_vector(int vertex) const;

    bool operator==(const FinStructure& o) const {
        return n_ == o.n_ && sig_ == o.sig_ && rels_ == o.rels_;
    }
    bool operator!=(const FinStructure& o) const { return !(*this == o); }

private:
    TupleCode normalize(int symbol, std::span<const int> tuple) const;
    void check_tuple(int symbol, std::span<const int> tuple) const;

    Signature sig_;
    int n_ = 0;
    std::vector<std::vector<TupleCode>> rels_;
};

// True iff every relation (including non-symmetric-flagged ones) is closed
// under all argument permutations.
bool is_symmetric(const FinStructure& s);

// True iff every nonempty subset of at most k elements is contained in the
// range of some relationship tuple.
bool k_irreducible(const FinStructure& s, int k);

// Smallest uncovered subset witnessing the failure of k-irreducibility, or
// nullopt when s is k-irreducible.
std::optional<std::vector<int>> k_irreducibility_witness(const FinStructure& s, int k);

}  // namespace homog
