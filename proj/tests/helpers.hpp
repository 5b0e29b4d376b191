#pragma once

// Shared fixtures and independent oracles for the unit tests.  The oracles
// here stay deliberately naive (full enumeration) so they can referee the
// engine's search paths.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "homog/structure.hpp"
#include "homog/morphism.hpp"
#include "homog/rng.hpp"

namespace testing {

using homog::FinStructure;
using homog::MorphismMode;

// Exhaustive injection enumeration: the reference for find_embedding /
// find_injective_homomorphism on small inputs.
inline std::optional<std::vector<int>> brute_force_morphism(const FinStructure& a,
                                                            const FinStructure& b,
                                                            MorphismMode mode) {
    if (a.size() > b.size()) return std::nullopt;
    std::vector<int> targets(static_cast<std::size_t>(b.size()));
    std::iota(targets.begin(), targets.end(), 0);
    std::vector<int> pick(static_cast<std::size_t>(a.size()));

    const auto& sig = a.signature();
    auto works = [&](const std::vector<int>& map) {
        for (int sym = 0; sym < sig.size(); ++sym) {
            const int r = sig.symbol(sym).arity;
            if (r > a.size()) continue;
            std::vector<int> idx(static_cast<std::size_t>(r), 0);
            while (true) {
                std::vector<int> t(static_cast<std::size_t>(r));
                for (int i = 0; i < r; ++i) t[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i)];
                if (homog::tuple_entries_distinct(t)) {
                    std::vector<int> mt(t.size());
                    for (std::size_t i = 0; i < t.size(); ++i) mt[i] = map[static_cast<std::size_t>(t[i])];
                    const bool in_a = a.has(sym, t);
                    const bool in_b = b.has(sym, mt);
                    if (in_a && !in_b) return false;
                    if (mode == MorphismMode::embedding && !in_a && in_b) return false;
                }
                int pos = r - 1;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == a.size() - 1) {
                    idx[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
            }
        }
        return true;
    };

    std::vector<bool> used(static_cast<std::size_t>(b.size()), false);
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == a.size()) return works(pick);
        for (int v = 0; v < b.size(); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            pick[static_cast<std::size_t>(depth)] = v;
            if (self(self, depth + 1)) return true;
            used[static_cast<std::size_t>(v)] = false;
        }
        return false;
    };
    if (rec(rec, 0)) return pick;
    return std::nullopt;
}

// 3-hypergraph on n labeled vertices whose hyperedges are the set bits of
// mask over the lexicographic triples.
inline FinStructure hypergraph_from_mask(int n, std::uint32_t mask) {
    FinStructure s(homog::ternary_signature(), n);
    int bit = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c, ++bit)
                if (mask & (1u << bit)) s.add(0, {a, b, c});
    return s;
}

inline FinStructure graph_from_mask(int n, std::uint32_t mask) {
    FinStructure s(homog::graph_signature(), n);
    int bit = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++bit)
            if (mask & (1u << bit)) s.add(0, {a, b});
    return s;
}

// Non-symmetric ternary structure on 3 vertices from a 6-bit ordering mask.
inline FinStructure ternary3_from_mask(std::uint32_t mask) {
    FinStructure s(homog::ternary_signature(false), 3);
    int bit = 0;
    std::vector<int> t{0, 1, 2};
    std::sort(t.begin(), t.end());
    do {
        if (mask & (1u << bit)) s.add(0, t);
        ++bit;
    } while (std::next_permutation(t.begin(), t.end()));
    return s;
}

inline FinStructure seeded_hypergraph(int n, std::uint64_t seed, int density_percent = 50) {
    FinStructure s(homog::ternary_signature(), n);
    homog::CounterRng rng(seed, 17);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (rng.below(100) < static_cast<std::uint64_t>(density_percent)) s.add(0, {a, b, c});
    return s;
}

}  // namespace testing
