#include "homog/amalgamation.hpp"

#include <algorithm>

#include "homog/canonical.hpp"
#include "homog/constraints.hpp"

namespace homog {

namespace {

// Counterexample assembled from a forbidden member with an uncovered pair
// {x, y}: the member is the free amalgam of its two one-vertex-deleted pieces
// over their shared part, and both pieces are permitted by minimality.
AmalgamCounterexample split_counterexample(const FinStructure& c, int x, int y) {
    std::vector<int> sa, sb, shared;
    for (int v = 0; v < c.size(); ++v) {
        if (v != y) sa.push_back(v);
        if (v != x) sb.push_back(v);
        if (v != x && v != y) shared.push_back(v);
    }
    AmalgamCounterexample out;
    out.a = c.induced(sa);
    out.b = c.induced(sb);
    out.overlap = c.induced(shared);
    auto rank = [](const std::vector<int>& set, int v) {
        return static_cast<int>(std::lower_bound(set.begin(), set.end(), v) - set.begin());
    };
    for (int v : shared) out.identification.emplace_back(rank(sa, v), rank(sb, v));
    out.amalgam = free_amalgam(out.a, out.b, out.identification);
    return out;
}

struct InstanceSearch {
    const Age& age;
    AmalgamKind kind;
    Budget* budget;

    bool cross_completion_exists(FinStructure& s, const std::vector<std::vector<int>>& cells,
                                 std::size_t at) {
        if (budget) budget->tick();
        if (at == cells.size()) return age.is_permitted(s, budget);
        const auto& support = cells[at];
        const int r = static_cast<int>(support.size());
        const std::uint64_t count = age.catalog().pattern_count(r);
        for (std::uint64_t p = 0; p < count; ++p) {
            age.catalog().write(s, support, age.catalog().pattern(r, p));
            if (r < s.size() && !age.is_permitted(s.induced(support), budget)) continue;
            if (cross_completion_exists(s, cells, at + 1)) return true;
        }
        age.catalog().write(s, support, age.catalog().pattern(r, 0));
        return false;
    }

    // Cells whose support meets both exclusive sides.
    std::vector<std::vector<int>> cross_cells(int n, const std::vector<bool>& a_only,
                                              const std::vector<bool>& b_only) const {
        std::vector<std::vector<int>> cells;
        for (int r = 2; r <= age.signature().max_arity_bound(); ++r) {
            if (!age.catalog().has_arity(r)) continue;
            std::vector<int> idx(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
            if (r > n) continue;
            while (true) {
                bool hits_a = false, hits_b = false;
                for (int v : idx) {
                    if (a_only[static_cast<std::size_t>(v)]) hits_a = true;
                    if (b_only[static_cast<std::size_t>(v)]) hits_b = true;
                }
                if (hits_a && hits_b) cells.push_back(idx);
                int pos = r - 1;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - r + pos) --pos;
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
                for (int j = pos + 1; j < r; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        return cells;
    }

    // True when this instance amalgamates; fills `witness` and returns false
    // otherwise.
    bool instance_ok(const FinStructure& a, const FinStructure& b,
                     const std::vector<std::pair<int, int>>& ident,
                     std::optional<AmalgamCounterexample>& witness) {
        FinStructure amalgam = free_amalgam(a, b, ident);
        const std::vector<int> b_map = free_amalgam_b_map(a, b, ident);
        if (kind == AmalgamKind::free) {
            if (age.is_permitted(amalgam, budget)) return true;
            witness = fill_witness(a, b, ident, amalgam);
            return false;
        }

        std::vector<bool> a_only(static_cast<std::size_t>(amalgam.size()), false);
        std::vector<bool> b_only(static_cast<std::size_t>(amalgam.size()), false);
        std::vector<bool> shared_a(static_cast<std::size_t>(a.size()), false);
        for (auto [av, bv] : ident) shared_a[static_cast<std::size_t>(av)] = true;
        for (int v = 0; v < a.size(); ++v)
            if (!shared_a[static_cast<std::size_t>(v)]) a_only[static_cast<std::size_t>(v)] = true;
        for (int v = a.size(); v < amalgam.size(); ++v) b_only[static_cast<std::size_t>(v)] = true;

        if (kind == AmalgamKind::disjoint) {
            FinStructure s = amalgam;
            if (cross_completion_exists(s, cross_cells(s.size(), a_only, b_only), 0)) return true;
            witness = fill_witness(a, b, ident, amalgam);
            return false;
        }

        // general: additionally allow identifying exclusive elements, i.e.
        // search every partial injective matching between the two sides.
        std::vector<int> xs, ys;
        for (int v = 0; v < amalgam.size(); ++v) {
            if (a_only[static_cast<std::size_t>(v)]) xs.push_back(v);
            if (b_only[static_cast<std::size_t>(v)]) ys.push_back(v);
        }
        // b-vertex behind each y output.
        std::vector<int> y_pre(static_cast<std::size_t>(amalgam.size()), -1);
        for (int v = 0; v < b.size(); ++v) y_pre[static_cast<std::size_t>(b_map[static_cast<std::size_t>(v)])] = v;

        std::vector<std::pair<int, int>> matching;  // (a vertex, b vertex)
        if (general_matchings(a, b, ident, xs, ys, y_pre, 0, matching)) return true;
        witness = fill_witness(a, b, ident, amalgam);
        return false;
    }

    bool general_matchings(const FinStructure& a, const FinStructure& b,
                           const std::vector<std::pair<int, int>>& ident,
                           const std::vector<int>& xs, const std::vector<int>& ys,
                           const std::vector<int>& y_pre, std::size_t xi,
                           std::vector<std::pair<int, int>>& matching) {
        if (budget) budget->tick();
        if (xi == xs.size()) {
            std::vector<std::pair<int, int>> full = ident;
            for (auto [ax, by] : matching) full.emplace_back(ax, by);
            FinStructure amalgam;
            try {
                amalgam = free_amalgam(a, b, full);
            } catch (const std::invalid_argument&) {
                return false;  // identified parts disagree
            }
            const std::vector<int> b_map = free_amalgam_b_map(a, b, full);
            std::vector<bool> a_only(static_cast<std::size_t>(amalgam.size()), false);
            std::vector<bool> b_only(static_cast<std::size_t>(amalgam.size()), false);
            std::vector<bool> shared_a(static_cast<std::size_t>(a.size()), false);
            for (auto [av, bv] : full) shared_a[static_cast<std::size_t>(av)] = true;
            for (int v = 0; v < a.size(); ++v)
                if (!shared_a[static_cast<std::size_t>(v)]) a_only[static_cast<std::size_t>(v)] = true;
            for (int v = a.size(); v < amalgam.size(); ++v) b_only[static_cast<std::size_t>(v)] = true;
            FinStructure s = amalgam;
            return cross_completion_exists(s, cross_cells(s.size(), a_only, b_only), 0);
        }
        // xs[xi] stays unidentified...
        if (general_matchings(a, b, ident, xs, ys, y_pre, xi + 1, matching)) return true;
        // ...or is glued to one of the unused ys.
        for (int y : ys) {
            bool used = false;
            for (auto [ax, by] : matching)
                if (y_pre[static_cast<std::size_t>(y)] == by) { used = true; break; }
            if (used) continue;
            matching.emplace_back(xs[xi], y_pre[static_cast<std::size_t>(y)]);
            const bool ok = general_matchings(a, b, ident, xs, ys, y_pre, xi + 1, matching);
            matching.pop_back();
            if (ok) return true;
        }
        return false;
    }

    AmalgamCounterexample fill_witness(const FinStructure& a, const FinStructure& b,
                                       const std::vector<std::pair<int, int>>& ident,
                                       FinStructure amalgam) const {
        AmalgamCounterexample w;
        w.a = a;
        w.b = b;
        std::vector<int> shared;
        for (auto [av, bv] : ident) shared.push_back(av);
        std::sort(shared.begin(), shared.end());
        w.overlap = a.induced(shared);
        w.identification = ident;
        w.amalgam = std::move(amalgam);
        return w;
    }
};

}  // namespace

AmalgamReport check_amalgamation(const Age& age, AmalgamKind kind, int max_union, Budget* budget) {
    if (max_union < 2) throw std::invalid_argument("check_amalgamation: max_union must be >= 2");
    AmalgamReport report;

    // Forbidden-list embedding ages: the free property reduces to
    // 2-irreducibility of the members (which are exactly the constraints).
    if (kind == AmalgamKind::free && !age.oracle() && age.mode() == MorphismMode::embedding) {
        for (const auto& member : age.forbidden()) {
            if (member.size() < 2 || member.size() > max_union) continue;
            if (auto witness = k_irreducibility_witness(member, 2)) {
                int x = (*witness)[0];
                int y = witness->size() > 1 ? (*witness)[1] : (x == 0 ? 1 : 0);
                report.verdict = AmalgamReport::Verdict::counterexample;
                report.witness = split_counterexample(member, std::min(x, y), std::max(x, y));
                report.verified_through = member.size();
                return report;
            }
        }
        report.verdict = AmalgamReport::Verdict::pass;
        report.verified_through = max_union;
        return report;
    }

    InstanceSearch search{age, kind, budget};
    try {
        for (int u = 2; u <= max_union; ++u) {
            for (int e = 0; e <= u - 2; ++e) {
                const auto overlaps = permitted_classes(age, e, budget);
                for (int a_size = e + 1; a_size <= u - 1; ++a_size) {
                    const int b_size = u + e - a_size;
                    if (b_size < a_size || b_size <= e) continue;
                    const auto a_classes = permitted_classes(age, a_size, budget);
                    const auto b_classes = permitted_classes(age, b_size, budget);
                    for (const auto& overlap : overlaps)
                        for (const auto& a : a_classes) {
                            const auto a_embs = all_morphisms(overlap, a, MorphismMode::embedding, budget);
                            if (a_embs.empty()) continue;
                            for (const auto& b : b_classes) {
                                const auto b_embs = all_morphisms(overlap, b, MorphismMode::embedding, budget);
                                for (const auto& fa : a_embs)
                                    for (const auto& fb : b_embs) {
                                        std::vector<std::pair<int, int>> ident;
                                        for (int i = 0; i < overlap.size(); ++i)
                                            ident.emplace_back(fa[static_cast<std::size_t>(i)],
                                                               fb[static_cast<std::size_t>(i)]);
                                        if (!search.instance_ok(a, b, ident, report.witness)) {
                                            report.verdict = AmalgamReport::Verdict::counterexample;
                                            report.verified_through = u;
                                            return report;
                                        }
                                    }
                            }
                        }
                }
            }
            report.verified_through = u;
        }
        report.verdict = AmalgamReport::Verdict::pass;
    } catch (const budget_exceeded&) {
        report.verdict = AmalgamReport::Verdict::truncated;
    }
    return report;
}

}  // namespace homog
