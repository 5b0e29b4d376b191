#include "homog/generic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "homog/constraints.hpp"
#include "homog/rng.hpp"

namespace homog {

namespace {

std::vector<int> checked_base(const FinStructure& s, std::vector<int> base) {
    std::sort(base.begin(), base.end());
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (base[i] < 0 || base[i] >= s.size())
            throw std::invalid_argument("extension base: element out of range");
        if (i > 0 && base[i] == base[i - 1])
            throw std::invalid_argument("extension base: repeated element");
    }
    return base;
}

// Fresh-vertex cells not already fixed by the demanded type: supports through
// `fresh` with at least one vertex outside base, ordered by (arity, lex).
std::vector<std::vector<int>> completion_cells(const Age& age, int fresh,
                                               const std::vector<int>& base) {
    std::vector<bool> in_base(static_cast<std::size_t>(fresh), false);
    for (int b : base) in_base[static_cast<std::size_t>(b)] = true;
    std::vector<std::vector<int>> cells;
    for (int r = 2; r <= age.signature().max_arity_bound(); ++r) {
        if (!age.catalog().has_arity(r)) continue;
        if (r - 1 > fresh) continue;
        std::vector<int> idx(static_cast<std::size_t>(r - 1));
        for (int i = 0; i < r - 1; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            bool outside = false;
            for (int v : idx)
                if (!in_base[static_cast<std::size_t>(v)]) outside = true;
            if (outside) {
                std::vector<int> support = idx;
                support.push_back(fresh);
                cells.push_back(std::move(support));
            }
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

// Does some morphism of the given mode map `member` onto exactly the vertex
// set `verts` of s?  Tiny backtracking straight on the membership tables.
bool member_on_set(const FinStructure& member, const FinStructure& s,
                   const std::vector<int>& verts, MorphismMode mode, Budget* budget) {
    const int f = member.size();
    std::vector<int> image(static_cast<std::size_t>(f), -1);
    std::vector<bool> used(verts.size(), false);
    const auto& sig = member.signature();

    auto consistent = [&](int u) {
        for (int sym = 0; sym < sig.size(); ++sym) {
            const int r = sig.symbol(sym).arity;
            // all r-subsets of assigned vertices containing u
            std::vector<int> assigned;
            for (int v = 0; v < f; ++v)
                if (image[static_cast<std::size_t>(v)] >= 0) assigned.push_back(v);
            if (static_cast<int>(assigned.size()) < r) continue;
            std::vector<int> idx(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
            while (true) {
                bool has_u = false;
                for (int i : idx)
                    if (assigned[static_cast<std::size_t>(i)] == u) has_u = true;
                if (has_u) {
                    std::vector<int> sub;
                    for (int i : idx) sub.push_back(assigned[static_cast<std::size_t>(i)]);
                    std::sort(sub.begin(), sub.end());
                    do {
                        std::vector<int> mapped(sub.size());
                        for (std::size_t i = 0; i < sub.size(); ++i)
                            mapped[i] = image[static_cast<std::size_t>(sub[i])];
                        const bool in_a = member.has(sym, sub);
                        const bool in_b = s.has(sym, mapped);
                        if (in_a && !in_b) return false;
                        if (mode == MorphismMode::embedding && !in_a && in_b) return false;
                    } while (std::next_permutation(sub.begin(), sub.end()));
                }
                int pos = r - 1;
                const int m = static_cast<int>(assigned.size());
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - r + pos) --pos;
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
                for (int j = pos + 1; j < r; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        return true;
    };

    auto rec = [&](auto&& self, int u) -> bool {
        if (budget) budget->tick();
        if (u == f) return true;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (used[i]) continue;
            image[static_cast<std::size_t>(u)] = verts[i];
            used[i] = true;
            if (consistent(u) && self(self, u + 1)) return true;
            image[static_cast<std::size_t>(u)] = -1;
            used[i] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

// Is the fresh cell over old vertices {u, v} decided once the cell with
// others (a, b) is being assigned (cells ordered lexicographically; base-base
// cells are fixed by the demanded type)?
bool cell_decided2(int u, int v, int a, int b, const std::vector<bool>& in_base) {
    if (in_base[static_cast<std::size_t>(u)] && in_base[static_cast<std::size_t>(v)]) return true;
    const int lo = std::min(u, v), hi = std::max(u, v);
    return lo < a || (lo == a && hi <= b);
}

// Old vertices outside the support whose fresh cells are all decided at this
// point of the assignment order.
std::vector<int> decided_pool(const std::vector<int>& support, int fresh,
                              const std::vector<bool>& in_base) {
    const int r = static_cast<int>(support.size());
    const int a = support[0];
    const int b = r >= 3 ? support[1] : -1;
    std::vector<int> pool;
    for (int x = 0; x < fresh; ++x) {
        if (std::binary_search(support.begin(), support.end() - 1, x)) continue;
        bool ok = false;
        if (r == 2) ok = in_base[static_cast<std::size_t>(x)] || x <= a;
        else ok = cell_decided2(x, a, a, b, in_base) && cell_decided2(x, b, a, b, in_base);
        if (ok) pool.push_back(x);
    }
    return pool;
}

// A copy of a forbidden member through the fresh vertex is fully decided
// exactly when each of its fresh cells is either fixed by the demanded type
// (all old vertices in the base) or has already been assigned (lex at most
// the current cell).  Checking each copy once, at its last-assigned cell,
// keeps the incremental check sound and complete for embedding mode too.
// Supports signatures of arity at most 3; complete_row falls back to a final
// whole-structure check beyond that.
bool local_violation(const Age& age, const FinStructure& s, const std::vector<int>& support,
                     int fresh, const std::vector<bool>& in_base, Budget* budget) {
    const int r = static_cast<int>(support.size());
    const int a = support[0];
    const int b = r >= 3 ? support[1] : -1;
    const std::vector<int> pool = decided_pool(support, fresh, in_base);

    for (const auto& member : age.forbidden()) {
        const int extras = member.size() - r;
        if (extras < 0 || extras > static_cast<int>(pool.size())) continue;
        std::vector<int> idx(static_cast<std::size_t>(extras));
        for (int i = 0; i < extras; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            if (budget) budget->tick();
            std::vector<int> verts = support;
            bool decided = true;
            for (int i : idx) verts.push_back(pool[static_cast<std::size_t>(i)]);
            if (r == 3 && extras >= 2) {
                for (std::size_t x = support.size(); x < verts.size() && decided; ++x)
                    for (std::size_t y = x + 1; y < verts.size() && decided; ++y)
                        decided = cell_decided2(verts[x], verts[y], a, b, in_base);
            }
            if (decided) {
                std::sort(verts.begin(), verts.end());
                if (member_on_set(member, s, verts, age.mode(), budget)) return true;
            }
            if (extras == 0) break;
            int pos = extras - 1;
            const int m = static_cast<int>(pool.size());
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - extras + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < extras; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return false;
}

struct RowChoice {
    std::vector<std::uint64_t> values;
    std::size_t at = 0;
};

// Seeded completion specialized to the quadruple-count age shape: membership
// lives in a hash set, rows merge into the structure once at the end.
bool fast_ternary_complete(const Age& age, FinStructure& s,
                           const std::vector<std::vector<int>>& cells, int fresh,
                           const std::vector<bool>& in_base, const std::vector<int>& bad_counts,
                           std::uint64_t seed, std::uint64_t step, Budget* budget) {
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

    const bool embedding = age.mode() == MorphismMode::embedding;
    const int min_bad = bad_counts.empty() ? 5 : bad_counts.front();
    auto is_bad = [&](int count) {
        if (embedding) return std::binary_search(bad_counts.begin(), bad_counts.end(), count);
        return count >= min_bad;
    };

    std::vector<RowChoice> stack(cells.size());
    std::vector<std::vector<int>> pools(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        stack[i].values = {0, 1};
        CounterRng rng(seed, CounterRng::mix(step * 0x9e37 + i + 1));
        rng.shuffle(stack[i].values);
        pools[i] = decided_pool(cells[i], fresh, in_base);
    }

    std::size_t pos = 0;
    while (pos < cells.size()) {
        if (budget) budget->tick();
        auto& frame = stack[pos];
        const int u = cells[pos][0], v = cells[pos][1];
        const TupleCode cell_code = code3(u, v, fresh);
        if (frame.at == frame.values.size()) {
            present.erase(cell_code);
            if (pos == 0) return false;
            frame.at = 0;
            --pos;
            ++stack[pos].at;
            continue;
        }
        const int bit = static_cast<int>(frame.values[frame.at]);
        if (bit) present.insert(cell_code);
        else present.erase(cell_code);
        bool violated = false;
        for (int x : pools[pos]) {
            const int count = (has3(x, u, v) ? 1 : 0) + (has3(x, u, fresh) ? 1 : 0) +
                              (has3(x, v, fresh) ? 1 : 0) + bit;
            if (is_bad(count)) { violated = true; break; }
        }
        if (violated) {
            ++frame.at;
            continue;
        }
        ++pos;
    }

    std::vector<std::vector<int>> added;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (stack[i].values[stack[i].at] == 1)
            added.push_back({cells[i][0], cells[i][1], fresh});
    s.merge_tuples(0, added);
    return true;
}

// Seeded backtracking over the completion cells; returns false when no
// permitted completion exists.
bool complete_row(const Age& age, FinStructure& s, const std::vector<std::vector<int>>& cells,
                  int fresh, const std::vector<int>& base, std::uint64_t seed, std::uint64_t step,
                  Budget* budget) {
    std::vector<bool> base_mask(static_cast<std::size_t>(fresh) + 1, false);
    for (int v : base) base_mask[static_cast<std::size_t>(v)] = true;
    if (const auto counts = forbidden_quadruple_counts(age))
        return fast_ternary_complete(age, s, cells, fresh, base_mask, *counts, seed, step, budget);

    std::vector<RowChoice> stack(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const int r = static_cast<int>(cells[i].size());
        const std::uint64_t count = age.catalog().pattern_count(r);
        stack[i].values.resize(count);
        for (std::uint64_t v = 0; v < count; ++v) stack[i].values[v] = v;
        CounterRng rng(seed, CounterRng::mix(step * 0x9e37 + i + 1));
        rng.shuffle(stack[i].values);
    }
    const std::vector<bool>& in_base = base_mask;
    // The localized check settles forbidden-list ages of arity <= 3 outright;
    // oracle ages and wider signatures get a whole-structure check at the end.
    const bool local_is_exact = !age.oracle() && age.signature().max_arity_used() <= 3;

    auto violates = [&](const std::vector<int>& support) {
        if (local_is_exact) return local_violation(age, s, support, fresh, in_base, budget);
        return !age.is_permitted(s.induced(support), budget);
    };

    std::size_t pos = 0;
    while (true) {
        if (pos == cells.size()) {
            if (local_is_exact || age.is_permitted(s, budget)) return true;
            if (cells.empty()) return false;
            --pos;
            ++stack[pos].at;
        }
        if (budget) budget->tick();
        auto& frame = stack[pos];
        const int r = static_cast<int>(cells[pos].size());
        if (frame.at == frame.values.size()) {
            age.catalog().write(s, cells[pos], age.catalog().pattern(r, 0));
            if (pos == 0) return false;
            frame.at = 0;
            --pos;
            ++stack[pos].at;
            continue;
        }
        age.catalog().write(s, cells[pos], age.catalog().pattern(r, frame.values[frame.at]));
        if (violates(cells[pos])) {
            ++frame.at;
            continue;
        }
        ++pos;
    }
}

FinStructure with_fresh_vertex(const FinStructure& s) {
    FinStructure out(s.signature(), s.size() + 1);
    for (int sym = 0; sym < s.signature().size(); ++sym) {
        const int arity = s.signature().symbol(sym).arity;
        for (TupleCode c : s.stored(sym)) out.add(sym, decode_tuple(c, arity));
    }
    return out;
}

// Applies the atoms of a one-point type over (base..., fresh).
void apply_type(FinStructure& s, const QfType& t, const std::vector<int>& base, int fresh) {
    std::vector<int> spots = base;
    spots.push_back(fresh);
    for (const auto& [sym, code] : t.atoms) {
        const int arity = s.signature().symbol(sym).arity;
        std::vector<int> idx = decode_tuple(code, arity);
        std::vector<int> tuple(static_cast<std::size_t>(arity));
        bool uses_fresh = false;
        for (int i = 0; i < arity; ++i) {
            tuple[static_cast<std::size_t>(i)] = spots[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            if (idx[static_cast<std::size_t>(i)] == static_cast<int>(base.size())) uses_fresh = true;
        }
        if (uses_fresh) s.add(sym, tuple);
    }
}

std::vector<std::pair<int, std::vector<int>>> row_through(const FinStructure& s, int fresh) {
    std::vector<std::pair<int, std::vector<int>>> row;
    for (int sym = 0; sym < s.signature().size(); ++sym) {
        const int arity = s.signature().symbol(sym).arity;
        for (TupleCode c : s.stored(sym)) {
            std::vector<int> t = decode_tuple(c, arity);
            if (std::find(t.begin(), t.end(), fresh) != t.end()) row.emplace_back(sym, t);
        }
    }
    return row;
}

}  // namespace

std::vector<QfType> one_point_extensions(const Age& age, const FinStructure& s,
                                         std::vector<int> base, Budget* budget) {
    base = checked_base(s, base);
    const FinStructure sub = s.induced(base);
    if (!age.is_permitted(sub, budget))
        throw std::invalid_argument("one_point_extensions: base substructure is forbidden");
    std::set<QfType> types;
    std::vector<int> full(static_cast<std::size_t>(sub.size()) + 1);
    for (std::size_t i = 0; i < full.size(); ++i) full[i] = static_cast<int>(i);
    for_each_one_point_extension(age, sub, [&](const FinStructure& ext) {
        if (age.is_permitted(ext, budget)) types.insert(qf_type(ext, full));
    }, budget);
    return {types.begin(), types.end()};
}

namespace {

bool demand_met(const FinStructure& s, const std::vector<int>& base, const QfType& t) {
    std::vector<int> probe = base;
    probe.push_back(0);
    for (int w = 0; w < s.size(); ++w) {
        if (std::binary_search(base.begin(), base.end(), w)) continue;
        probe.back() = w;
        if (qf_type(s, probe) == t) return true;
    }
    return false;
}

std::vector<std::vector<int>> candidate_subsets(const FinStructure& s, int d, CounterRng& rng) {
    const int n = s.size();
    std::vector<std::vector<int>> subs;
    if (d > n) return subs;
    if (d == 0) {
        subs.push_back({});
        return subs;
    }
    // Exhaustive while small, sampled beyond.
    double total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<double>(n - i) / (i + 1);
    if (total <= 64) {
        std::vector<int> idx(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            subs.push_back(idx);
            int pos = d - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - d + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < d; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        rng.shuffle(subs);
    } else {
        for (int k = 0; k < 32; ++k) {
            std::set<int> pick;
            while (static_cast<int>(pick.size()) < d)
                pick.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
            subs.emplace_back(pick.begin(), pick.end());
        }
    }
    return subs;
}

}  // namespace

GenericApprox grow_generic(const Age& age, int steps, std::uint64_t seed, int demand_bound,
                           Budget* budget) {
    if (steps < 0) throw std::invalid_argument("grow_generic: steps must be >= 0");
    if (demand_bound < 0) throw std::invalid_argument("grow_generic: demand bound must be >= 0");
    GenericApprox g;
    g.age = age;
    g.seed = seed;
    g.demand_bound = demand_bound;
    g.structure = FinStructure(age.signature(), 0);

    for (int step = 0; step < steps; ++step) {
        const int n = g.structure.size();
        int d = step % (demand_bound + 1);
        if (d > n) d = n;
        CounterRng rng(seed, static_cast<std::uint64_t>(step));

        std::vector<int> base;
        std::optional<QfType> chosen;
        for (const auto& sub : candidate_subsets(g.structure, d, rng)) {
            auto types = one_point_extensions(age, g.structure, sub, budget);
            std::vector<QfType> unmet;
            for (auto& t : types)
                if (!demand_met(g.structure, sub, t)) unmet.push_back(std::move(t));
            if (!unmet.empty()) {
                rng.shuffle(unmet);
                base = sub;
                chosen = std::move(unmet.front());
                break;
            }
        }
        if (!chosen) {
            // Everything in reach is realized; re-realize a seeded demand so
            // the step still adds a vertex.
            auto subs = candidate_subsets(g.structure, d, rng);
            for (const auto& sub : subs) {
                auto types = one_point_extensions(age, g.structure, sub, budget);
                if (!types.empty()) {
                    rng.shuffle(types);
                    base = sub;
                    chosen = std::move(types.front());
                    break;
                }
            }
        }
        if (!chosen)
            throw std::runtime_error("grow_generic: no permitted one-point extension exists");

        const int fresh = n;
        FinStructure next = with_fresh_vertex(g.structure);
        apply_type(next, *chosen, base, fresh);
        const auto cells = completion_cells(age, fresh, base);
        if (!complete_row(age, next, cells, fresh, base, seed, static_cast<std::uint64_t>(step),
                          budget))
            throw std::runtime_error("grow_generic: no permitted completion for the demanded type");
        g.structure = std::move(next);
        g.log.push_back({base, *chosen, row_through(g.structure, fresh)});
    }
    return g;
}

FinStructure replay_log(const Age& age, const std::vector<GrowthLogEntry>& log, bool verify,
                        Budget* budget) {
    FinStructure s(age.signature(), 0);
    for (const auto& entry : log) {
        FinStructure next = with_fresh_vertex(s);
        for (const auto& [sym, tuple] : entry.row) next.add(sym, tuple);
        if (verify && !age.is_permitted(next, budget))
            throw std::runtime_error("replay_log: prefix is forbidden");
        s = std::move(next);
    }
    return s;
}

ExtensionReport check_extension_property(const GenericApprox& g, int demand_size, int sample,
                                         Budget* budget) {
    if (demand_size < 0 || demand_size > g.structure.size())
        throw std::invalid_argument("check_extension_property: demand size out of range");
    ExtensionReport report;
    const FinStructure& s = g.structure;

    auto realized_types = [&](const std::vector<int>& sub) {
        std::set<QfType> seen;
        std::vector<int> probe = sub;
        probe.push_back(0);
        for (int w = 0; w < s.size(); ++w) {
            if (std::binary_search(sub.begin(), sub.end(), w)) continue;
            probe.back() = w;
            seen.insert(qf_type(s, probe));
        }
        return seen;
    };

    if (sample <= 0) {
        // Exhaustive over all subsets of the given size.
        const int n = s.size();
        std::vector<int> idx(static_cast<std::size_t>(demand_size));
        for (int i = 0; i < demand_size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            const auto types = one_point_extensions(g.age, s, idx, budget);
            const auto present = realized_types(idx);
            for (const auto& t : types) {
                ++report.total;
                if (present.count(t)) ++report.met;
            }
            if (demand_size == 0) break;
            int pos = demand_size - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - demand_size + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < demand_size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        return report;
    }

    for (int k = 0; k < sample; ++k) {
        CounterRng rng(g.seed ^ 0x5eedfeedull, static_cast<std::uint64_t>(k));
        std::set<int> pick;
        while (static_cast<int>(pick.size()) < demand_size)
            pick.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(s.size()))));
        std::vector<int> sub(pick.begin(), pick.end());
        const auto types = one_point_extensions(g.age, s, sub, budget);
        if (types.empty()) continue;
        const auto& t = types[rng.below(types.size())];
        ++report.total;
        if (demand_met(s, sub, t)) ++report.met;
    }
    return report;
}

RelativeExtensionResult check_extension_relative_to_E(
    const FinStructure& s, const std::vector<std::vector<int>>& classes,
    const std::vector<std::pair<int, int>>& demands) {
    if (s.signature().max_arity_used() > 2)
        throw std::invalid_argument("check_extension_relative_to_E: structure must be binary");
    std::vector<int> class_of(static_cast<std::size_t>(s.size()), -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) {
            if (v < 0 || v >= s.size() || class_of[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("check_extension_relative_to_E: not a partition");
            class_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        }
    for (int v = 0; v < s.size(); ++v)
        if (class_of[static_cast<std::size_t>(v)] == -1)
            throw std::invalid_argument("check_extension_relative_to_E: partition misses an element");

    int required_class = -1;
    for (const auto& [a, b] : demands) {
        if (a < 0 || a >= s.size() || b < 0 || b >= s.size() || a == b)
            throw std::invalid_argument("check_extension_relative_to_E: malformed demand");
        if (required_class == -1) required_class = class_of[static_cast<std::size_t>(b)];
        else if (class_of[static_cast<std::size_t>(b)] != required_class)
            throw std::invalid_argument("check_extension_relative_to_E: demands span several classes");
    }

    RelativeExtensionResult result;
    if (demands.empty()) {
        result.pass = true;
        return result;
    }
    for (int b = 0; b < s.size(); ++b) {
        bool ok = true;
        for (const auto& [ai, bi] : demands) {
            if (qf_type(s, {ai, b}) != qf_type(s, {ai, bi})) { ok = false; break; }
        }
        if (ok) {
            result.pass = true;
            result.witness = b;
            return result;
        }
    }
    return result;
}

}  // namespace homog
