#include "homog/constraints.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "homog/canonical.hpp"

namespace homog {

namespace {

// Memoized permittedness of small induced substructures, keyed by labeled
// encoding.  Generation re-derives the same few-vertex fragments constantly.
class PermittedMemo {
public:
    explicit PermittedMemo(const Age& age) : age_(age) {}

    bool permitted(const FinStructure& s, Budget* budget) {
        const std::string key = labeled_encoding(s);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const bool ok = age_.is_permitted(s, budget);
        memo_.emplace(std::move(key), ok);
        return ok;
    }

private:
    const Age& age_;
    std::map<std::string, bool> memo_;
};

// Cells created when vertex `fresh` is added to a structure of size
// fresh (+1 total): every r-support containing fresh, smallest supports first.
std::vector<std::vector<int>> fresh_cells(const Signature& sig, const PatternCatalog& catalog,
                                          int fresh) {
    std::vector<std::vector<int>> cells;
    for (int r = 1; r <= sig.max_arity_bound(); ++r) {
        if (!catalog.has_arity(r)) continue;
        if (r - 1 > fresh) continue;
        // (r-1)-subsets of 0..fresh-1 in lex order, plus the fresh vertex.
        std::vector<int> idx(static_cast<std::size_t>(r - 1));
        for (int i = 0; i < r - 1; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<int> support = idx;
            support.push_back(fresh);
            cells.push_back(support);
            if (r == 1) break;
            int pos = r - 2;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == fresh - (r - 1) + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < r - 1; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return cells;
}

struct Generator {
    const Age& age;
    Budget* budget;
    PermittedMemo memo;

    explicit Generator(const Age& age_, Budget* budget_) : age(age_), budget(budget_), memo(age_) {}

    // Visit every one-vertex extension of `parent` consistent with the
    // catalog, pruning partial rows whose proper induced substructures are
    // already forbidden.
    template <typename Visit>
    void extensions(const FinStructure& parent, Visit&& visit) {
        const int fresh = parent.size();
        FinStructure s(age.signature(), fresh + 1);
        for (int sym = 0; sym < age.signature().size(); ++sym) {
            const int arity = age.signature().symbol(sym).arity;
            for (TupleCode c : parent.stored(sym)) s.add(sym, decode_tuple(c, arity));
        }
        const auto cells = fresh_cells(age.signature(), age.catalog(), fresh);
        rec(s, cells, 0, std::forward<Visit>(visit));
    }

    template <typename Visit>
    void rec(FinStructure& s, const std::vector<std::vector<int>>& cells, std::size_t at,
             Visit&& visit) {
        if (at == cells.size()) {
            visit(s);
            return;
        }
        const auto& support = cells[at];
        const int r = static_cast<int>(support.size());
        const std::uint64_t count = age.catalog().pattern_count(r);
        for (std::uint64_t p = 0; p < count; ++p) {
            if (budget) budget->tick();
            age.catalog().write(s, support, age.catalog().pattern(r, p));
            if (r < s.size()) {
                if (!memo.permitted(s.induced(support), budget)) continue;
            }
            rec(s, cells, at + 1, visit);
        }
        age.catalog().write(s, support, age.catalog().pattern(r, 0));
    }
};

}  // namespace

ConstraintRecord make_constraint_record(const Age& age, const FinStructure& s, Budget* budget) {
    if (age.is_permitted(s, budget))
        throw std::invalid_argument("constraint record: structure is permitted");
    ConstraintRecord rec;
    rec.structure = s;
    for (int v = 0; v < s.size(); ++v) {
        std::vector<int> rest;
        for (int u = 0; u < s.size(); ++u)
            if (u != v) rest.push_back(u);
        const bool ok = age.is_permitted(s.induced(rest), budget);
        if (!ok)
            throw std::invalid_argument("constraint record: deletion of element " +
                                        std::to_string(v) + " stays forbidden");
        rec.witnesses.push_back({v, ok});
    }
    return rec;
}

ConstraintEnumeration enumerate_constraints(const Age& age, int max_size, Budget* budget) {
    if (max_size < 1) throw std::invalid_argument("enumerate_constraints: max_size must be >= 1");
    if (age.oracle() && max_size > age.oracle()->max_decidable_size())
        throw std::invalid_argument("enumerate_constraints: oracle cannot decide structures this large");

    ConstraintEnumeration out;
    Generator gen(age, budget);
    std::vector<FinStructure> parents{FinStructure(age.signature(), 0)};
    std::vector<std::pair<std::string, ConstraintRecord>> found;

    try {
        for (int u = 1; u <= max_size; ++u) {
            std::set<std::string> seen;
            std::vector<std::pair<std::string, FinStructure>> next;
            for (const auto& parent : parents) {
                gen.extensions(parent, [&](const FinStructure& cand) {
                    auto canon = canonicalize(cand);
                    if (!seen.insert(canon.form.bytes).second) return;
                    FinStructure rep = cand.relabeled(canon.labeling);
                    if (age.is_permitted(rep, budget)) {
                        next.emplace_back(canon.form.bytes, std::move(rep));
                        return;
                    }
                    // Forbidden: a constraint iff every deletion is permitted.
                    bool minimal = true;
                    for (int v = 0; v < rep.size() && minimal; ++v) {
                        std::vector<int> rest;
                        for (int w = 0; w < rep.size(); ++w)
                            if (w != v) rest.push_back(w);
                        minimal = gen.memo.permitted(rep.induced(rest), budget);
                    }
                    if (minimal)
                        found.emplace_back(canon.form.bytes, make_constraint_record(age, rep, budget));
                });
            }
            std::sort(next.begin(), next.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            parents.clear();
            for (auto& [key, s] : next) parents.push_back(std::move(s));
            out.completed_size = u;
        }
    } catch (const budget_exceeded&) {
        out.truncated = true;
    }

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.second.structure.size() != b.second.structure.size())
            return a.second.structure.size() < b.second.structure.size();
        return a.first < b.first;
    });
    for (auto& [key, rec] : found) {
        if (rec.structure.size() <= out.completed_size)
            out.constraints.push_back(std::move(rec));
    }
    return out;
}

void for_each_one_point_extension(const Age& age, const FinStructure& parent,
                                  const std::function<void(const FinStructure&)>& visit,
                                  Budget* budget) {
    Generator gen(age, budget);
    gen.extensions(parent, [&](const FinStructure& s) { visit(s); });
}

std::vector<FinStructure> permitted_classes(const Age& age, int size, Budget* budget) {
    if (size == 0) return {FinStructure(age.signature(), 0)};
    Generator gen(age, budget);
    std::vector<FinStructure> parents{FinStructure(age.signature(), 0)};
    for (int u = 1; u <= size; ++u) {
        std::set<std::string> seen;
        std::vector<std::pair<std::string, FinStructure>> next;
        for (const auto& parent : parents) {
            gen.extensions(parent, [&](const FinStructure& cand) {
                auto canon = canonicalize(cand);
                if (!seen.insert(canon.form.bytes).second) return;
                FinStructure rep = cand.relabeled(canon.labeling);
                if (age.is_permitted(rep, budget))
                    next.emplace_back(canon.form.bytes, std::move(rep));
            });
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        parents.clear();
        for (auto& [key, s] : next) parents.push_back(std::move(s));
    }
    return parents;
}

ConstraintRecord minimize_forbidden(const Age& age, const FinStructure& s,
                                    const std::vector<int>& protected_elements,
                                    Budget* budget) {
    if (age.is_permitted(s, budget))
        throw std::invalid_argument("minimize_forbidden: structure is permitted");
    std::vector<bool> is_protected(static_cast<std::size_t>(s.size()), false);
    for (int v : protected_elements) {
        if (v < 0 || v >= s.size())
            throw std::invalid_argument("minimize_forbidden: protected element out of range");
        is_protected[static_cast<std::size_t>(v)] = true;
    }
    if (!protected_elements.empty() &&
        !age.is_permitted(s.induced(protected_elements), budget))
        throw std::invalid_argument("minimize_forbidden: protected part is itself forbidden");

    std::vector<int> kept;
    for (int v = 0; v < s.size(); ++v) kept.push_back(v);
    auto try_delete = [&](int v) {
        std::vector<int> rest;
        for (int u : kept)
            if (u != v) rest.push_back(u);
        if (!age.is_permitted(s.induced(rest), budget)) {
            kept = std::move(rest);
            return true;
        }
        return false;
    };
    // Non-protected elements first, then protected ones; heredity makes a
    // single pass over each group enough.
    for (int v = 0; v < s.size(); ++v)
        if (!is_protected[static_cast<std::size_t>(v)]) try_delete(v);
    for (int v = 0; v < s.size(); ++v)
        if (is_protected[static_cast<std::size_t>(v)] &&
            std::find(kept.begin(), kept.end(), v) != kept.end())
            try_delete(v);

    return make_constraint_record(age, s.induced(kept), budget);
}

RandomAgeReport is_random_age(const std::vector<ConstraintRecord>& constraints,
                              const Signature& sig) {
    RandomAgeReport report;
    std::set<int> arities;
    for (const auto& s : sig.symbols()) arities.insert(s.arity);
    report.mixed_arity = arities.size() > 1;
    const int top = sig.max_arity_used();
    report.random = true;
    for (int k = 1; k <= std::max(top, 1); ++k) {
        ArityLevelCheck level;
        level.k = k;
        for (const auto& rec : constraints) {
            bool within = true;
            for (int sym = 0; sym < sig.size() && within; ++sym)
                if (sig.symbol(sym).arity > k && rec.structure.stored_count(sym) > 0)
                    within = false;
            if (!within) continue;
            ++level.constraint_count;
            level.largest = std::max(level.largest, rec.structure.size());
        }
        level.ok = level.largest <= k;
        report.random = report.random && level.ok;
        report.levels.push_back(level);
    }
    return report;
}

FactReport check_fact_hypotheses(const std::vector<FinStructure>& forbidden,
                                 FactHypotheses which, Budget* budget) {
    FactReport report;
    const int irred = which == FactHypotheses::henson ? 2 : 3;
    for (std::size_t i = 0; i < forbidden.size(); ++i) {
        if (auto witness = k_irreducibility_witness(forbidden[i], irred)) {
            FactViolation v;
            v.kind = irred == 2 ? "not-2-irreducible" : "not-3-irreducible";
            v.member_a = static_cast<int>(i);
            v.witness = *witness;
            report.violations.push_back(v);
            report.variant_violations.push_back(v);
        }
    }
    if (which == FactHypotheses::conant) {
        for (std::size_t i = 0; i < forbidden.size(); ++i)
            for (std::size_t j = 0; j < forbidden.size(); ++j) {
                if (i == j) continue;
                if (auto map = find_injective_homomorphism(forbidden[i], forbidden[j], budget)) {
                    FactViolation v;
                    v.kind = "injective-homomorphism";
                    v.member_a = static_cast<int>(i);
                    v.member_b = static_cast<int>(j);
                    v.witness = *map;
                    report.violations.push_back(v);
                }
                if (auto emb = find_embedding(forbidden[i], forbidden[j], budget)) {
                    FactViolation v;
                    v.kind = "embedding";
                    v.member_a = static_cast<int>(i);
                    v.member_b = static_cast<int>(j);
                    v.witness = *emb;
                    report.variant_violations.push_back(v);
                }
            }
    }
    report.pass = report.violations.empty();
    report.variant_pass = report.variant_violations.empty();
    return report;
}

}  // namespace homog
