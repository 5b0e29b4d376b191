#include "homog/structure.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace homog {

FinStructure::FinStructure(Signature sig, int n) : sig_(std::move(sig)), n_(n) {
    if (n < 0 || n > 255)
        throw std::invalid_argument("structure: universe size must be in 0..255");
    rels_.resize(static_cast<std::size_t>(sig_.size()));
}

void FinStructure::check_tuple(int symbol, std::span<const int> tuple) const {
    if (symbol < 0 || symbol >= sig_.size())
        throw std::invalid_argument("structure: unknown symbol index");
    const auto& def = sig_.symbol(symbol);
    if (static_cast<int>(tuple.size()) != def.arity)
        throw std::invalid_argument("structure: tuple length does not match arity of '" + def.name + "'");
    for (int v : tuple)
        if (v < 0 || v >= n_)
            throw std::invalid_argument("structure: tuple entry out of range");
    if (!tuple_entries_distinct(tuple))
        throw std::invalid_argument("structure: tuple entries must be pairwise distinct");
}

TupleCode FinStructure::normalize(int symbol, std::span<const int> tuple) const {
    if (sig_.symbol(symbol).symmetric) {
        std::vector<int> t(tuple.begin(), tuple.end());
        std::sort(t.begin(), t.end());
        return encode_tuple(t);
    }
    return encode_tuple(tuple);
}

bool FinStructure::has(int symbol, std::span<const int> tuple) const {
    check_tuple(symbol, tuple);
    const TupleCode c = normalize(symbol, tuple);
    const auto& v = rels_[static_cast<std::size_t>(symbol)];
    return std::binary_search(v.begin(), v.end(), c);
}

void FinStructure::add(int symbol, std::span<const int> tuple) {
    check_tuple(symbol, tuple);
    const TupleCode c = normalize(symbol, tuple);
    auto& v = rels_[static_cast<std::size_t>(symbol)];
    auto it = std::lower_bound(v.begin(), v.end(), c);
    if (it == v.end() || *it != c) v.insert(it, c);
}

void FinStructure::remove(int symbol, std::span<const int> tuple) {
    check_tuple(symbol, tuple);
    const TupleCode c = normalize(symbol, tuple);
    auto& v = rels_[static_cast<std::size_t>(symbol)];
    auto it = std::lower_bound(v.begin(), v.end(), c);
    if (it != v.end() && *it == c) v.erase(it);
}

void FinStructure::merge_tuples(int symbol, const std::vector<std::vector<int>>& tuples) {
    auto& v = rels_[static_cast<std::size_t>(symbol)];
    v.reserve(v.size() + tuples.size());
    for (const auto& t : tuples) {
        check_tuple(symbol, t);
        v.push_back(normalize(symbol, t));
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<std::vector<int>> FinStructure::expanded_tuples(int symbol) const {
    const auto& def = sig_.symbol(symbol);
    std::vector<std::vector<int>> out;
    for (TupleCode c : stored(symbol)) {
        std::vector<int> t = decode_tuple(c, def.arity);
        if (def.symmetric) {
            std::sort(t.begin(), t.end());
            do out.push_back(t); while (std::next_permutation(t.begin(), t.end()));
        } else {
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::size_t FinStructure::total_stored() const {
    std::size_t total = 0;
    for (const auto& v : rels_) total += v.size();
    return total;
}

FinStructure FinStructure::induced(std::span<const int> subset) const {
    std::vector<int> sub(subset.begin(), subset.end());
    std::sort(sub.begin(), sub.end());
    for (std::size_t i = 0; i < sub.size(); ++i) {
        if (sub[i] < 0 || sub[i] >= n_)
            throw std::invalid_argument("induced: element out of range");
        if (i > 0 && sub[i] == sub[i - 1])
            throw std::invalid_argument("induced: repeated element in subset");
    }

    FinStructure out(sig_, static_cast<int>(sub.size()));

    // Small subsets: probe the possible tuples instead of scanning the
    // relation tables.
    if (sub.size() <= 4 && n_ > static_cast<int>(2 * sub.size())) {
        const int k = static_cast<int>(sub.size());
        for (int sym = 0; sym < sig_.size(); ++sym) {
            const int arity = sig_.symbol(sym).arity;
            if (arity > k) continue;
            std::vector<int> idx(static_cast<std::size_t>(arity));
            for (int i = 0; i < arity; ++i) idx[static_cast<std::size_t>(i)] = i;
            // ascending index subsets; expand orderings per symmetry
            while (true) {
                std::vector<int> local = idx;
                std::vector<int> global(local.size());
                do {
                    for (std::size_t i = 0; i < local.size(); ++i)
                        global[i] = sub[static_cast<std::size_t>(local[i])];
                    if (has(sym, global)) out.add(sym, local);
                } while (!sig_.symbol(sym).symmetric &&
                         std::next_permutation(local.begin(), local.end()));
                int pos = arity - 1;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - arity + pos) --pos;
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
                for (int j = pos + 1; j < arity; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        return out;
    }

    std::vector<int> where(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < sub.size(); ++i)
        where[static_cast<std::size_t>(sub[i])] = static_cast<int>(i);
    for (int sym = 0; sym < sig_.size(); ++sym) {
        const int arity = sig_.symbol(sym).arity;
        for (TupleCode c : stored(sym)) {
            std::vector<int> t = decode_tuple(c, arity);
            bool inside = true;
            for (int& v : t) {
                const int w = where[static_cast<std::size_t>(v)];
                if (w < 0) { inside = false; break; }
                v = w;
            }
            if (inside) out.add(sym, t);
        }
    }
    return out;
}

FinStructure FinStructure::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("relabeled: permutation length mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int v : perm) {
        if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("relabeled: not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    FinStructure out(sig_, n_);
    for (int sym = 0; sym < sig_.size(); ++sym) {
        const int arity = sig_.symbol(sym).arity;
        for (TupleCode c : stored(sym)) {
            std::vector<int> t = decode_tuple(c, arity);
            for (int& v : t) v = perm[static_cast<std::size_t>(v)];
            out.add(sym, t);
        }
    }
    return out;
}

std::vector<int> FinStructure::degree_vector(int vertex) const {
    std::vector<int> deg(static_cast<std::size_t>(sig_.size()), 0);
    for (int sym = 0; sym < sig_.size(); ++sym) {
        const int arity = sig_.symbol(sym).arity;
        for (TupleCode c : stored(sym)) {
            const std::vector<int> t = decode_tuple(c, arity);
            if (std::find(t.begin(), t.end(), vertex) != t.end())
                ++deg[static_cast<std::size_t>(sym)];
        }
    }
    return deg;
}

bool is_symmetric(const FinStructure& s) {
    const auto& sig = s.signature();
    for (int sym = 0; sym < sig.size(); ++sym) {
        if (sig.symbol(sym).symmetric) continue;  // closed by representation
        const int arity = sig.symbol(sym).arity;
        for (TupleCode c : s.stored(sym)) {
            std::vector<int> t = decode_tuple(c, arity);
            std::sort(t.begin(), t.end());
            do {
                if (!s.has(sym, t)) return false;
            } while (std::next_permutation(t.begin(), t.end()));
        }
    }
    return true;
}

std::optional<std::vector<int>> k_irreducibility_witness(const FinStructure& s, int k) {
    if (k < 1) throw std::invalid_argument("k_irreducible: k must be >= 1");
    const int n = s.size();
    // Collect the vertex set of every relationship once.
    std::vector<std::vector<int>> supports;
    for (int sym = 0; sym < s.signature().size(); ++sym) {
        const int arity = s.signature().symbol(sym).arity;
        for (TupleCode c : s.stored(sym)) {
            std::vector<int> t = decode_tuple(c, arity);
            std::sort(t.begin(), t.end());
            supports.push_back(std::move(t));
        }
    }
    auto covered = [&](const std::vector<int>& sub) {
        for (const auto& sup : supports)
            if (std::includes(sup.begin(), sup.end(), sub.begin(), sub.end())) return true;
        return false;
    };
    // Subsets of size 1..min(k, n) in lex order; smallest uncovered one wins.
    const int limit = std::min(k, n);
    for (int size = 1; size <= limit; ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            if (!covered(idx)) return idx;
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

bool k_irreducible(const FinStructure& s, int k) {
    return !k_irreducibility_witness(s, k).has_value();
}

}  // namespace homog
