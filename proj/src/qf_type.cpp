#include "homog/qf_type.hpp"

#include <algorithm>
#include <stdexcept>

namespace homog {

std::string QfType::encode() const {
    std::string out;
    out.reserve(8 + eq_pattern.size() + atoms.size() * 10);
    out.push_back(static_cast<char>(arity));
    for (int e : eq_pattern) out.push_back(static_cast<char>(e));
    for (const auto& [sym, code] : atoms) {
        out.push_back(static_cast<char>(sym));
        for (int b = 0; b < 8; ++b)
            out.push_back(static_cast<char>((code >> (8 * b)) & 0xff));
    }
    return out;
}

QfType qf_type(const FinStructure& s, std::span<const int> tuple) {
    const int k = static_cast<int>(tuple.size());
    for (int v : tuple)
        if (v < 0 || v >= s.size())
            throw std::invalid_argument("qf_type: tuple entry out of range");

    QfType t;
    t.arity = k;
    t.eq_pattern.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        int first = i;
        for (int j = 0; j < i; ++j)
            if (tuple[static_cast<std::size_t>(j)] == tuple[static_cast<std::size_t>(i)]) { first = j; break; }
        t.eq_pattern[static_cast<std::size_t>(i)] = first;
    }

    const auto& sig = s.signature();
    for (int sym = 0; sym < sig.size(); ++sym) {
        const int r = sig.symbol(sym).arity;
        if (r > k) continue;
        // All position tuples whose referenced elements are pairwise distinct.
        std::vector<int> idx(static_cast<std::size_t>(r), 0);
        while (true) {
            std::vector<int> elems(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i)
                elems[static_cast<std::size_t>(i)] = tuple[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            if (tuple_entries_distinct(elems) && s.has(sym, elems))
                t.atoms.emplace_back(sym, encode_tuple(idx));
            int pos = r - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - 1) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
        }
    }
    std::sort(t.atoms.begin(), t.atoms.end());
    return t;
}

}  // namespace homog
