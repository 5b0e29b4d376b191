#include "homog/expansion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "homog/cells.hpp"

namespace homog {

namespace {

std::string derived_name(const Signature& base, const DerivedSymbolInfo& info) {
    std::string name = "Q_" + base.symbol(info.base_symbol).name + "_a";
    for (int p : info.param_positions) name += std::to_string(p);
    name += "_p";
    for (int i : info.perm) name += std::to_string(i);
    return name;
}

}  // namespace

QfType point_type_over(const FinStructure& m, const std::vector<int>& params, int x) {
    std::vector<int> tuple = params;
    tuple.push_back(x);
    return qf_type(m, tuple);
}

ExpandedSignature expanded_signature(const Signature& base, const std::vector<int>& a_params) {
    if (a_params.size() > 9)
        throw std::invalid_argument("expanded_signature: at most 9 parameters supported");
    ExpandedSignature out;
    out.base = base;
    out.base_symbol_count = base.size();
    out.params = a_params;

    std::vector<SymbolDef> symbols = base.symbols();
    const int p = static_cast<int>(a_params.size());
    for (int sym = 0; sym < base.size(); ++sym) {
        const int r = base.symbol(sym).arity;
        if (r <= 1) continue;
        for (int k = 1; k < r; ++k) {
            // Parameter tuples of length k over the parameter list, lex order.
            std::vector<int> pos(static_cast<std::size_t>(k), 0);
            if (p == 0) continue;
            while (true) {
                for (const auto& perm : permutations_of(r)) {
                    DerivedSymbolInfo info;
                    info.base_symbol = sym;
                    info.param_positions = pos;
                    info.perm = perm;
                    symbols.push_back(SymbolDef{derived_name(base, info), r - k,
                                                base.symbol(sym).symmetric});
                    out.derived.push_back(std::move(info));
                }
                int at = k - 1;
                while (at >= 0 && pos[static_cast<std::size_t>(at)] == p - 1) {
                    pos[static_cast<std::size_t>(at)] = 0;
                    --at;
                }
                if (at < 0) break;
                ++pos[static_cast<std::size_t>(at)];
            }
        }
    }
    out.signature = Signature(std::move(symbols), base.max_arity_bound());
    return out;
}

MPResult build_M_P(const FinStructure& m, const std::vector<int>& a_params,
                   const std::vector<QfType>& p_types) {
    if (p_types.empty()) throw std::invalid_argument("build_M_P: p_types must be nonempty");
    std::set<int> seen_params;
    for (int a : a_params) {
        if (a < 0 || a >= m.size())
            throw std::invalid_argument("build_M_P: parameter out of range");
        if (!seen_params.insert(a).second)
            throw std::invalid_argument("build_M_P: parameters must be distinct");
    }
    std::set<QfType> wanted(p_types.begin(), p_types.end());
    for (const auto& t : wanted)
        if (t.arity != static_cast<int>(a_params.size()) + 1)
            throw std::invalid_argument("build_M_P: p_type arity must be |params| + 1");

    MPResult out;
    out.info = expanded_signature(m.signature(), a_params);

    std::set<QfType> realized;
    for (int x = 0; x < m.size(); ++x) {
        if (seen_params.count(x)) continue;
        const QfType t = point_type_over(m, a_params, x);
        if (wanted.count(t)) {
            out.universe.push_back(x);
            realized.insert(t);
        }
    }
    if (realized.size() != wanted.size())
        throw std::invalid_argument("build_M_P: some p_type is not realized outside the parameters");

    std::vector<int> rank(static_cast<std::size_t>(m.size()), -1);
    for (std::size_t i = 0; i < out.universe.size(); ++i)
        rank[static_cast<std::size_t>(out.universe[i])] = static_cast<int>(i);

    FinStructure mp(out.info.signature, static_cast<int>(out.universe.size()));

    // Base symbols restrict to the kept universe.
    for (int sym = 0; sym < out.info.base_symbol_count; ++sym) {
        const int arity = m.signature().symbol(sym).arity;
        for (TupleCode c : m.stored(sym)) {
            std::vector<int> t = decode_tuple(c, arity);
            bool inside = true;
            for (int& v : t) {
                if (rank[static_cast<std::size_t>(v)] < 0) { inside = false; break; }
                v = rank[static_cast<std::size_t>(v)];
            }
            if (inside) mp.add(sym, t);
        }
    }

    // Derived symbols: a tuple b holds iff the permuted concatenation of b
    // with the absorbed parameters is a base relationship of m.
    for (std::size_t d = 0; d < out.info.derived.size(); ++d) {
        const auto& info = out.info.derived[d];
        const int sym_out = out.info.base_symbol_count + static_cast<int>(d);
        const int r = m.signature().symbol(info.base_symbol).arity;
        const int arity = r - static_cast<int>(info.param_positions.size());
        std::vector<int> absorbed;
        for (int p : info.param_positions) absorbed.push_back(a_params[static_cast<std::size_t>(p)]);

        // All ordered tuples of distinct kept elements (ambient labels).
        std::vector<int> idx(static_cast<std::size_t>(arity), 0);
        const int u = static_cast<int>(out.universe.size());
        if (u == 0) break;
        while (true) {
            std::vector<int> b;
            for (int i : idx) b.push_back(out.universe[static_cast<std::size_t>(i)]);
            if (tuple_entries_distinct(b)) {
                std::vector<int> concat = b;
                concat.insert(concat.end(), absorbed.begin(), absorbed.end());
                std::vector<int> permuted(static_cast<std::size_t>(r));
                for (int i = 0; i < r; ++i)
                    permuted[static_cast<std::size_t>(i)] =
                        concat[static_cast<std::size_t>(info.perm[static_cast<std::size_t>(i)])];
                if (tuple_entries_distinct(permuted) && m.has(info.base_symbol, permuted)) {
                    std::vector<int> local = idx;
                    mp.add(sym_out, local);
                }
            }
            int at = arity - 1;
            while (at >= 0 && idx[static_cast<std::size_t>(at)] == u - 1) {
                idx[static_cast<std::size_t>(at)] = 0;
                --at;
            }
            if (at < 0) break;
            ++idx[static_cast<std::size_t>(at)];
        }
    }

    out.structure = std::move(mp);
    return out;
}

FinStructure reduct_M_P_minus(const MPResult& mp) {
    std::vector<SymbolDef> kept;
    for (int sym = mp.info.base_symbol_count; sym < mp.info.signature.size(); ++sym)
        kept.push_back(mp.info.signature.symbol(sym));
    Signature sig(kept, mp.info.signature.max_arity_bound());
    FinStructure out(sig, mp.structure.size());
    for (int sym = mp.info.base_symbol_count; sym < mp.info.signature.size(); ++sym) {
        const int arity = mp.info.signature.symbol(sym).arity;
        for (TupleCode c : mp.structure.stored(sym))
            out.add(sym - mp.info.base_symbol_count, decode_tuple(c, arity));
    }
    return out;
}

}  // namespace homog
