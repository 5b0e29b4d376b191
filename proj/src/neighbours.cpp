#include "homog/neighbours.hpp"

#include <algorithm>
#include <stdexcept>

namespace homog {

std::vector<FinStructure> enumerate_neighbours(const FinStructure& c, std::array<int, 3> triple,
                                               const PatternCatalog& catalog) {
    if (c.signature().max_arity_used() > 3)
        throw std::invalid_argument("enumerate_neighbours: vocabulary must be ternary-bounded");
    std::array<int, 3> t = triple;
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
        throw std::invalid_argument("enumerate_neighbours: triple entries must be distinct");
    for (int v : t)
        if (v < 0 || v >= c.size())
            throw std::invalid_argument("enumerate_neighbours: triple entry out of range");

    std::vector<FinStructure> out;
    if (!catalog.has_arity(3)) {
        out.push_back(c);
        return out;
    }
    const std::vector<int> support{t[0], t[1], t[2]};
    const CellPattern own = catalog.read(c, support);
    bool saw_own = false;
    const std::uint64_t count = catalog.pattern_count(3);
    for (std::uint64_t p = 0; p < count; ++p) {
        const CellPattern pat = catalog.pattern(3, p);
        if (pat == own) saw_own = true;
        FinStructure n = c;
        catalog.write(n, support, pat);
        out.push_back(std::move(n));
    }
    if (!saw_own) out.push_back(c);  // c's own shape sits outside the catalog
    return out;
}

std::vector<FinStructure> enumerate_neighbours(const FinStructure& c, std::array<int, 3> triple) {
    return enumerate_neighbours(c, triple, PatternCatalog(c.signature()));
}

IsolationReport classify_isolation(const ConstraintRecord& c, const Age& age, Budget* budget) {
    const FinStructure& s = c.structure;
    if (s.size() < 3)
        throw std::invalid_argument("classify_isolation: constraint must have at least 3 elements");
    if (age.is_permitted(s, budget))
        throw std::invalid_argument("classify_isolation: structure is permitted");

    IsolationReport report;
    bool all_proper_permitted = true;
    bool every_triple_has_permitted = true;

    for (int a = 0; a < s.size() && every_triple_has_permitted; ++a)
        for (int b = a + 1; b < s.size() && every_triple_has_permitted; ++b)
            for (int d = b + 1; d < s.size() && every_triple_has_permitted; ++d) {
                bool some_permitted = false;
                for (const auto& n : enumerate_neighbours(s, {a, b, d}, age.catalog())) {
                    if (n == s) continue;
                    if (age.is_permitted(n, budget)) {
                        some_permitted = true;
                        if (!report.permitted_neighbour) report.permitted_neighbour = n;
                    } else if (all_proper_permitted) {
                        all_proper_permitted = false;
                        report.witness_triple = {a, b, d};
                        report.forbidden_neighbour = n;
                    }
                }
                if (!some_permitted) {
                    every_triple_has_permitted = false;
                    report.witness_triple = {a, b, d};
                }
            }

    if (!every_triple_has_permitted) report.verdict = IsolationVerdict::not_weakly_isolated;
    else if (all_proper_permitted) report.verdict = IsolationVerdict::isolated;
    else report.verdict = IsolationVerdict::weakly_isolated;
    return report;
}

}  // namespace homog
