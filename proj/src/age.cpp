#include "homog/age.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "homog/canonical.hpp"

namespace homog {

std::optional<std::vector<int>> forbidden_quadruple_counts(const Age& age) {
    if (age.oracle()) return std::nullopt;
    const auto& sig = age.signature();
    if (sig.size() != 1 || sig.symbol(0).arity != 3 || !sig.symbol(0).symmetric)
        return std::nullopt;
    std::vector<int> counts;
    for (const auto& member : age.forbidden()) {
        if (member.size() != 4) return std::nullopt;
        counts.push_back(static_cast<int>(member.stored_count(0)));
    }
    std::sort(counts.begin(), counts.end());
    return counts;
}

namespace {

// Quadruple-count membership test; used instead of the morphism search when
// the structure is large.
bool quadruple_scan_permitted(const FinStructure& s, const std::vector<int>& bad,
                              bool embedding, Budget* budget) {
    if (s.size() < 4 || bad.empty()) return true;
    const int min_bad = bad.front();
    std::unordered_set<TupleCode> present(s.stored(0).begin(), s.stored(0).end());
    auto code3 = [](int x, int y, int z) {
        int a = x, b = y, c = z;
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        const int t[3] = {a, b, c};
        return encode_tuple(std::span<const int>(t, 3));
    };
    auto has3 = [&](int x, int y, int z) { return present.count(code3(x, y, z)) != 0; };
    auto is_bad = [&](int count) {
        return embedding ? std::binary_search(bad.begin(), bad.end(), count) : count >= min_bad;
    };

    if ((embedding && min_bad == 0) || (!embedding && min_bad == 0)) {
        // Edgeless quadruples matter too; scan every 4-set.
        for (int a = 0; a < s.size(); ++a)
            for (int b = a + 1; b < s.size(); ++b)
                for (int c = b + 1; c < s.size(); ++c)
                    for (int d = c + 1; d < s.size(); ++d) {
                        if (budget) budget->tick();
                        const int count = (has3(a, b, c) ? 1 : 0) + (has3(a, b, d) ? 1 : 0) +
                                          (has3(a, c, d) ? 1 : 0) + (has3(b, c, d) ? 1 : 0);
                        if (is_bad(count)) return false;
                    }
        return true;
    }

    // Every bad quadruple holds at least one hyperedge; anchor the scan there.
    for (TupleCode code : s.stored(0)) {
        const std::vector<int> t = decode_tuple(code, 3);
        for (int d = 0; d < s.size(); ++d) {
            if (d == t[0] || d == t[1] || d == t[2]) continue;
            if (budget) budget->tick();
            const int count = 1 + (has3(t[0], t[1], d) ? 1 : 0) + (has3(t[0], t[2], d) ? 1 : 0) +
                              (has3(t[1], t[2], d) ? 1 : 0);
            if (is_bad(count)) return false;
        }
    }
    return true;
}

}  // namespace

Age::Age(Signature sig, MorphismMode mode, std::vector<FinStructure> forbidden,
         std::shared_ptr<const PermittednessOracle> oracle)
    : sig_(std::move(sig)), mode_(mode), oracle_(std::move(oracle)), catalog_(sig_) {
    for (const auto& f : forbidden)
        if (f.signature() != sig_)
            throw std::invalid_argument("age: forbidden member over a different signature");

    // Deduplicate up to isomorphism, keep deterministic order.
    std::vector<std::pair<CanonicalForm, FinStructure>> keyed;
    for (auto& f : forbidden) keyed.emplace_back(canonical_form(f), std::move(f));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
        return a.first.bytes < b.first.bytes;
    });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());

    // Drop members another member maps into: anything containing the larger
    // one already contains the smaller.
    std::vector<bool> drop(keyed.size(), false);
    for (std::size_t i = 0; i < keyed.size(); ++i)
        for (std::size_t j = 0; j < keyed.size(); ++j) {
            if (i == j || drop[j] || drop[i]) continue;
            if (keyed[i].first == keyed[j].first) continue;
            if (find_morphism(keyed[j].second, keyed[i].second, mode_))
                drop[i] = true;
        }
    for (std::size_t i = 0; i < keyed.size(); ++i)
        if (!drop[i]) forbidden_.push_back(std::move(keyed[i].second));
}

bool Age::is_permitted(const FinStructure& s, Budget* budget) const {
    if (s.signature() != sig_)
        throw std::invalid_argument("is_permitted: signature mismatch");
    if (oracle_) return oracle_->permitted(s, budget);
    if (s.size() > 8) {
        if (const auto counts = forbidden_quadruple_counts(*this))
            return quadruple_scan_permitted(s, *counts, mode_ == MorphismMode::embedding, budget);
    }
    for (const auto& f : forbidden_)
        if (find_morphism(f, s, mode_, budget)) return false;
    return true;
}

const std::vector<std::uint64_t>& Age::locally_permitted_patterns(int r) const {
    if (local_cache_.empty()) {
        local_cache_.resize(static_cast<std::size_t>(sig_.max_arity_bound()) + 1);
        local_cache_ready_.assign(static_cast<std::size_t>(sig_.max_arity_bound()) + 1, false);
    }
    auto& slot = local_cache_.at(static_cast<std::size_t>(r));
    if (local_cache_ready_[static_cast<std::size_t>(r)]) return slot;
    const std::uint64_t count = catalog_.pattern_count(r);
    std::vector<int> support(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) support[static_cast<std::size_t>(i)] = i;
    for (std::uint64_t p = 0; p < count; ++p) {
        FinStructure probe(sig_, r);
        catalog_.write(probe, support, catalog_.pattern(r, p));
        if (is_permitted(probe)) slot.push_back(p);
    }
    local_cache_ready_[static_cast<std::size_t>(r)] = true;
    return slot;
}

bool EmbedsIntoOracle::permitted(const FinStructure& s, Budget* budget) const {
    if (s.size() > target_.size()) return false;
    if (s.size() <= 6) {
        const std::string key = labeled_encoding(s);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const bool ok = find_embedding(s, target_, budget).has_value();
        cache_.emplace(std::move(key), ok);
        return ok;
    }
    return find_embedding(s, target_, budget).has_value();
}

}  // namespace homog
