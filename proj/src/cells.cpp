#include "homog/cells.hpp"

#include <algorithm>
#include <stdexcept>

namespace homog {

const std::vector<std::vector<int>>& permutations_of(int r) {
    static std::vector<std::vector<std::vector<int>>> table = [] {
        std::vector<std::vector<std::vector<int>>> t(9);
        for (int r = 0; r <= 8; ++r) {
            std::vector<int> p(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) p[static_cast<std::size_t>(i)] = i;
            do t[static_cast<std::size_t>(r)].push_back(p);
            while (std::next_permutation(p.begin(), p.end()));
        }
        return t;
    }();
    return table.at(static_cast<std::size_t>(r));
}

PatternCatalog::PatternCatalog(const Signature& sig) : sig_(sig) {
    const int top = sig.max_arity_bound();
    by_arity_.resize(static_cast<std::size_t>(top) + 1);
    restricted_.resize(static_cast<std::size_t>(top) + 1);
    is_restricted_.assign(static_cast<std::size_t>(top) + 1, false);
    for (int i = 0; i < sig.size(); ++i)
        by_arity_[static_cast<std::size_t>(sig.symbol(i).arity)].push_back(i);
}

void PatternCatalog::restrict_arity(int r, std::vector<CellPattern> allowed) {
    for (const auto& p : allowed)
        if (p.arity != r || p.masks.size() != symbols_of_arity(r).size())
            throw std::invalid_argument("pattern catalog: pattern shape mismatch");
    restricted_.at(static_cast<std::size_t>(r)) = std::move(allowed);
    is_restricted_.at(static_cast<std::size_t>(r)) = true;
}

bool PatternCatalog::restricted(int r) const {
    return r < static_cast<int>(is_restricted_.size()) && is_restricted_[static_cast<std::size_t>(r)];
}

bool PatternCatalog::has_arity(int r) const {
    return r < static_cast<int>(by_arity_.size()) && !by_arity_[static_cast<std::size_t>(r)].empty();
}

const std::vector<int>& PatternCatalog::symbols_of_arity(int r) const {
    return by_arity_.at(static_cast<std::size_t>(r));
}

std::uint64_t PatternCatalog::free_bits(int r) const {
    std::uint64_t bits = 0;
    for (int sym : symbols_of_arity(r)) {
        bits += sig_.symbol(sym).symmetric ? 1
            : static_cast<std::uint64_t>(permutations_of(r).size());
    }
    return bits;
}

std::uint64_t PatternCatalog::pattern_count(int r) const {
    if (!has_arity(r)) return 1;  // the unique empty pattern
    if (restricted(r)) return restricted_[static_cast<std::size_t>(r)].size();
    const std::uint64_t bits = free_bits(r);
    if (bits > 20)
        throw std::invalid_argument("pattern catalog: free cell space too large; restrict this arity");
    return 1ull << bits;
}

CellPattern PatternCatalog::pattern(int r, std::uint64_t index) const {
    CellPattern p;
    p.arity = r;
    if (!has_arity(r)) {
        if (index != 0) throw std::out_of_range("pattern index");
        return p;
    }
    if (restricted(r)) return restricted_[static_cast<std::size_t>(r)].at(index);
    const auto& syms = symbols_of_arity(r);
    p.masks.resize(syms.size(), 0);
    std::uint64_t cursor = index;
    for (std::size_t i = 0; i < syms.size(); ++i) {
        const int width = sig_.symbol(syms[i]).symmetric ? 1 : static_cast<int>(permutations_of(r).size());
        p.masks[i] = static_cast<std::uint32_t>(cursor & ((1ull << width) - 1));
        cursor >>= width;
    }
    if (cursor != 0) throw std::out_of_range("pattern index");
    return p;
}

std::uint64_t PatternCatalog::index_of(int r, const CellPattern& p) const {
    if (restricted(r)) {
        const auto& list = restricted_[static_cast<std::size_t>(r)];
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i] == p) return i;
        throw std::invalid_argument("pattern catalog: pattern not in restricted list");
    }
    const auto& syms = symbols_of_arity(r);
    std::uint64_t index = 0;
    int shift = 0;
    for (std::size_t i = 0; i < syms.size(); ++i) {
        const int width = sig_.symbol(syms[i]).symmetric ? 1 : static_cast<int>(permutations_of(r).size());
        index |= static_cast<std::uint64_t>(p.masks[i]) << shift;
        shift += width;
    }
    return index;
}

CellPattern PatternCatalog::read(const FinStructure& s, std::span<const int> support) const {
    const int r = static_cast<int>(support.size());
    CellPattern p;
    p.arity = r;
    if (!has_arity(r)) return p;
    const auto& syms = symbols_of_arity(r);
    const auto& perms = permutations_of(r);
    p.masks.resize(syms.size(), 0);
    for (std::size_t i = 0; i < syms.size(); ++i) {
        const int sym = syms[i];
        if (sig_.symbol(sym).symmetric) {
            if (s.has(sym, support)) p.masks[i] = 1;
            continue;
        }
        for (std::size_t pi = 0; pi < perms.size(); ++pi) {
            std::vector<int> t(static_cast<std::size_t>(r));
            for (int j = 0; j < r; ++j)
                t[static_cast<std::size_t>(j)] = support[static_cast<std::size_t>(perms[pi][static_cast<std::size_t>(j)])];
            if (s.has(sym, t)) p.masks[i] |= 1u << pi;
        }
    }
    return p;
}

void PatternCatalog::write(FinStructure& s, std::span<const int> support, const CellPattern& p) const {
    const int r = static_cast<int>(support.size());
    if (!has_arity(r)) return;
    const auto& syms = symbols_of_arity(r);
    const auto& perms = permutations_of(r);
    for (std::size_t i = 0; i < syms.size(); ++i) {
        const int sym = syms[i];
        if (sig_.symbol(sym).symmetric) {
            s.remove(sym, support);
            if (p.masks[i] & 1u) s.add(sym, support);
            continue;
        }
        for (std::size_t pi = 0; pi < perms.size(); ++pi) {
            std::vector<int> t(static_cast<std::size_t>(r));
            for (int j = 0; j < r; ++j)
                t[static_cast<std::size_t>(j)] = support[static_cast<std::size_t>(perms[pi][static_cast<std::size_t>(j)])];
            s.remove(sym, t);
            if (p.masks[i] & (1u << pi)) s.add(sym, t);
        }
    }
}

}  // namespace homog
