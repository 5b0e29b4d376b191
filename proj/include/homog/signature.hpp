#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homog {

struct SymbolDef {
    std::string name;
    int arity = 0;
    bool symmetric = false;

    bool operator==(const SymbolDef&) const = default;
};

// Relational vocabulary: an ordered list of symbols with arities and symmetry
// flags.  A symmetric symbol of arity r is interpreted as a relation closed
// under all r! argument permutations; structures store one representative per
// orbit and expand on demand.
class Signature {
public:
    static constexpr int default_max_arity = 4;

    Signature() = default;
    explicit Signature(std::vector<SymbolDef> symbols, int max_arity = default_max_arity)
        : symbols_(std::move(symbols)), max_arity_(max_arity) {
        if (max_arity_ < 1 || max_arity_ > 8)
            throw std::invalid_argument("signature: max arity must be in 1..8");
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            const auto& s = symbols_[i];
            if (s.name.empty())
                throw std::invalid_argument("signature: empty symbol name");
            if (s.arity < 1 || s.arity > max_arity_)
                throw std::invalid_argument("signature: arity of '" + s.name + "' out of 1.." +
                                            std::to_string(max_arity_));
            for (std::size_t j = 0; j < i; ++j)
                if (symbols_[j].name == s.name)
                    throw std::invalid_argument("signature: duplicate symbol '" + s.name + "'");
        }
    }

    int size() const { return static_cast<int>(symbols_.size()); }
    const SymbolDef& symbol(int i) const { return symbols_.at(static_cast<std::size_t>(i)); }
    const std::vector<SymbolDef>& symbols() const { return symbols_; }
    int max_arity_bound() const { return max_arity_; }

    // Largest arity actually present (0 for the empty signature).
    int max_arity_used() const {
        int m = 0;
        for (const auto& s : symbols_) m = std::max(m, s.arity);
        return m;
    }

    std::optional<int> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i].name == name) return static_cast<int>(i);
        return std::nullopt;
    }

    bool operator==(const Signature& o) const { return symbols_ == o.symbols_; }
    bool operator!=(const Signature& o) const { return !(*this == o); }

    // Symbols of arity <= k, preserving order.  Used by the per-arity reduct
    // clause of the random-structure test.
    Signature restricted_to_arity(int k) const {
        std::vector<SymbolDef> kept;
        for (const auto& s : symbols_)
            if (s.arity <= k) kept.push_back(s);
        return Signature(std::move(kept), max_arity_);
    }

private:
    std::vector<SymbolDef> symbols_;
    int max_arity_ = default_max_arity;
};

// Common vocabularies used throughout.
inline Signature ternary_signature(bool symmetric = true) {
    return Signature({SymbolDef{"R", 3, symmetric}});
}
inline Signature graph_signature() {
    return Signature({SymbolDef{"E", 2, true}});
}
inline Signature tournament_signature() {
    return Signature({SymbolDef{"E", 2, false}});
}

}  // namespace homog
