#include "homog/morphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace homog {

namespace {

struct MatchContext {
    const FinStructure& a;
    const FinStructure& b;
    MorphismMode mode;
    Budget* budget;
    std::vector<int> order;       // pattern vertices in assignment order
    std::vector<int> map;         // pattern vertex -> target vertex or -1
    std::vector<bool> used;       // target vertex taken
    std::vector<std::vector<int>> a_deg, b_deg;

    MatchContext(const FinStructure& a_, const FinStructure& b_, MorphismMode mode_, Budget* budget_)
        : a(a_), b(b_), mode(mode_), budget(budget_),
          map(static_cast<std::size_t>(a_.size()), -1),
          used(static_cast<std::size_t>(b_.size()), false) {
        a_deg.resize(static_cast<std::size_t>(a.size()));
        for (int v = 0; v < a.size(); ++v) a_deg[static_cast<std::size_t>(v)] = a.degree_vector(v);
        b_deg.resize(static_cast<std::size_t>(b.size()));
        for (int v = 0; v < b.size(); ++v) b_deg[static_cast<std::size_t>(v)] = b.degree_vector(v);
        // Most-constrained pattern vertices first.
        order.resize(static_cast<std::size_t>(a.size()));
        for (int v = 0; v < a.size(); ++v) order[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            int dx = 0, dy = 0;
            for (std::size_t s = 0; s < a_deg[static_cast<std::size_t>(x)].size(); ++s) {
                dx += a_deg[static_cast<std::size_t>(x)][s];
                dy += a_deg[static_cast<std::size_t>(y)][s];
            }
            if (dx != dy) return dx > dy;
            return x < y;
        });
    }

    bool degree_ok(int u, int v) const {
        const auto& du = a_deg[static_cast<std::size_t>(u)];
        const auto& dv = b_deg[static_cast<std::size_t>(v)];
        for (std::size_t s = 0; s < du.size(); ++s)
            if (du[s] > dv[s]) return false;
        return true;
    }

    bool atom_ok(int sym, std::vector<int> elems) const {
        std::sort(elems.begin(), elems.end());
        do {
            std::vector<int> mapped(elems.size());
            for (std::size_t i = 0; i < elems.size(); ++i)
                mapped[i] = map[static_cast<std::size_t>(elems[i])];
            const bool in_a = a.has(sym, elems);
            const bool in_b = b.has(sym, mapped);
            if (in_a && !in_b) return false;
            if (mode == MorphismMode::embedding && !in_a && in_b) return false;
        } while (std::next_permutation(elems.begin(), elems.end()));
        return true;
    }

    // Check all atoms among assigned vertices that involve u.
    bool consistent(int u) const {
        const auto& sig = a.signature();
        std::vector<int> assigned;
        for (int v = 0; v < a.size(); ++v)
            if (map[static_cast<std::size_t>(v)] >= 0 && v != u) assigned.push_back(v);
        for (int sym = 0; sym < sig.size(); ++sym) {
            const int r = sig.symbol(sym).arity;
            if (r == 1) {
                if (!atom_ok(sym, {u})) return false;
                continue;
            }
            const int m = static_cast<int>(assigned.size());
            if (r - 1 > m) continue;
            // Choose r-1 assigned partners; atom_ok covers every ordering.
            std::vector<int> idx(static_cast<std::size_t>(r - 1));
            for (int i = 0; i < r - 1; ++i) idx[static_cast<std::size_t>(i)] = i;
            while (true) {
                std::vector<int> elems{u};
                for (int i : idx) elems.push_back(assigned[static_cast<std::size_t>(i)]);
                if (!atom_ok(sym, elems)) return false;
                int pos = r - 2;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - (r - 1) + pos) --pos;
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
                for (int j = pos + 1; j < r - 1; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        return true;
    }

    bool rec(std::size_t depth) {
        if (budget) budget->tick();
        if (depth == order.size()) return true;
        const int u = order[depth];
        if (map[static_cast<std::size_t>(u)] >= 0) {
            // preassigned by a covering constraint
            return rec(depth + 1);
        }
        for (int v = 0; v < b.size(); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (!degree_ok(u, v)) continue;
            map[static_cast<std::size_t>(u)] = v;
            used[static_cast<std::size_t>(v)] = true;
            if (consistent(u) && rec(depth + 1)) return true;
            map[static_cast<std::size_t>(u)] = -1;
            used[static_cast<std::size_t>(v)] = false;
        }
        return false;
    }

    void collect(std::size_t depth, std::vector<std::vector<int>>& out) {
        if (budget) budget->tick();
        if (depth == order.size()) {
            out.push_back(map);
            return;
        }
        const int u = order[depth];
        for (int v = 0; v < b.size(); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (!degree_ok(u, v)) continue;
            map[static_cast<std::size_t>(u)] = v;
            used[static_cast<std::size_t>(v)] = true;
            if (consistent(u)) collect(depth + 1, out);
            map[static_cast<std::size_t>(u)] = -1;
            used[static_cast<std::size_t>(v)] = false;
        }
    }
};

}  // namespace

std::optional<std::vector<int>> find_morphism(const FinStructure& a, const FinStructure& b,
                                              MorphismMode mode, Budget* budget) {
    if (a.signature() != b.signature())
        throw std::invalid_argument("find_morphism: signature mismatch");
    if (a.size() > b.size()) return std::nullopt;
    MatchContext ctx(a, b, mode, budget);
    if (ctx.rec(0)) return ctx.map;
    return std::nullopt;
}

std::optional<std::vector<int>> find_embedding(const FinStructure& a, const FinStructure& b,
                                               Budget* budget) {
    return find_morphism(a, b, MorphismMode::embedding, budget);
}

std::optional<std::vector<int>> find_injective_homomorphism(const FinStructure& a,
                                                            const FinStructure& b,
                                                            Budget* budget) {
    return find_morphism(a, b, MorphismMode::injective_homomorphism, budget);
}

std::vector<std::vector<int>> all_morphisms(const FinStructure& a, const FinStructure& b,
                                            MorphismMode mode, Budget* budget) {
    if (a.signature() != b.signature())
        throw std::invalid_argument("all_morphisms: signature mismatch");
    std::vector<std::vector<int>> out;
    if (a.size() > b.size()) return out;
    MatchContext ctx(a, b, mode, budget);
    ctx.collect(0, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool morphism_exists_covering(const FinStructure& a, const FinStructure& b, MorphismMode mode,
                              std::span<const int> required, Budget* budget) {
    if (a.signature() != b.signature())
        throw std::invalid_argument("morphism_exists_covering: signature mismatch");
    if (a.size() > b.size()) return false;
    if (static_cast<int>(required.size()) > a.size()) return false;
    // Preassign the required target vertices to pattern vertices in every
    // injective way, then finish with the usual search.
    std::vector<int> pat(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) pat[static_cast<std::size_t>(i)] = i;
    std::vector<int> chosen;
    std::vector<bool> taken(static_cast<std::size_t>(a.size()), false);

    struct Assigner {
        const FinStructure& a;
        const FinStructure& b;
        MorphismMode mode;
        Budget* budget;
        std::span<const int> required;
        std::vector<bool>& taken;

        bool rec(std::size_t pos, std::vector<std::pair<int, int>>& pre) {
            if (pos == required.size()) {
                MatchContext ctx(a, b, mode, budget);
                for (auto [pu, tv] : pre) {
                    ctx.map[static_cast<std::size_t>(pu)] = tv;
                    ctx.used[static_cast<std::size_t>(tv)] = true;
                    if (!ctx.degree_ok(pu, tv) || !ctx.consistent(pu)) return false;
                }
                return ctx.rec(0);
            }
            for (int pu = 0; pu < a.size(); ++pu) {
                if (taken[static_cast<std::size_t>(pu)]) continue;
                taken[static_cast<std::size_t>(pu)] = true;
                pre.emplace_back(pu, required[pos]);
                const bool found = rec(pos + 1, pre);
                pre.pop_back();
                taken[static_cast<std::size_t>(pu)] = false;
                if (found) return true;
            }
            return false;
        }
    };

    Assigner assigner{a, b, mode, budget, required, taken};
    std::vector<std::pair<int, int>> pre;
    return assigner.rec(0, pre);
}

std::vector<int> free_amalgam_b_map(const FinStructure& a, const FinStructure& b,
                                    const std::vector<std::pair<int, int>>& overlap) {
    std::vector<int> b_to_out(static_cast<std::size_t>(b.size()), -1);
    std::vector<bool> a_used(static_cast<std::size_t>(a.size()), false);
    for (auto [av, bv] : overlap) {
        if (av < 0 || av >= a.size() || bv < 0 || bv >= b.size())
            throw std::invalid_argument("free_amalgam: overlap vertex out of range");
        if (a_used[static_cast<std::size_t>(av)] || b_to_out[static_cast<std::size_t>(bv)] != -1)
            throw std::invalid_argument("free_amalgam: overlap identification not injective");
        a_used[static_cast<std::size_t>(av)] = true;
        b_to_out[static_cast<std::size_t>(bv)] = av;
    }
    int next = a.size();
    for (int v = 0; v < b.size(); ++v)
        if (b_to_out[static_cast<std::size_t>(v)] == -1) b_to_out[static_cast<std::size_t>(v)] = next++;
    return b_to_out;
}

FinStructure free_amalgam(const FinStructure& a, const FinStructure& b,
                          const std::vector<std::pair<int, int>>& overlap) {
    if (a.signature() != b.signature())
        throw std::invalid_argument("free_amalgam: signature mismatch");
    const std::vector<int> b_to_out = free_amalgam_b_map(a, b, overlap);

    // The identified parts must induce identical substructures.
    const auto& sig = a.signature();
    for (int sym = 0; sym < sig.size(); ++sym) {
        const int r = sig.symbol(sym).arity;
        if (r > static_cast<int>(overlap.size())) continue;
        std::vector<int> idx(static_cast<std::size_t>(r), 0);
        while (true) {
            std::vector<int> at(static_cast<std::size_t>(r)), bt(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) {
                at[static_cast<std::size_t>(i)] = overlap[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])].first;
                bt[static_cast<std::size_t>(i)] = overlap[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])].second;
            }
            if (tuple_entries_distinct(at) && a.has(sym, at) != b.has(sym, bt))
                throw std::invalid_argument("free_amalgam: overlap induces different substructures");
            int pos = r - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == static_cast<int>(overlap.size()) - 1) {
                idx[static_cast<std::size_t>(pos)] = 0; --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
        }
    }

    const int n_out = a.size() + b.size() - static_cast<int>(overlap.size());
    FinStructure out(sig, n_out);
    for (int sym = 0; sym < sig.size(); ++sym) {
        const int arity = sig.symbol(sym).arity;
        for (TupleCode c : a.stored(sym)) out.add(sym, decode_tuple(c, arity));
        for (TupleCode c : b.stored(sym)) {
            std::vector<int> t = decode_tuple(c, arity);
            for (int& v : t) v = b_to_out[static_cast<std::size_t>(v)];
            out.add(sym, t);
        }
    }
    return out;
}

}  // namespace homog
