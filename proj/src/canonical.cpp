#include "homog/canonical.hpp"

#include <algorithm>
#include <optional>

#include "homog/partition.hpp"

namespace homog {

namespace {

void append_u32(std::string& out, std::uint32_t v) {
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}
void append_u64(std::string& out, std::uint64_t v) {
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

std::string signature_fingerprint(const Signature& sig) {
    std::string out;
    append_u32(out, static_cast<std::uint32_t>(sig.size()));
    for (const auto& s : sig.symbols()) {
        append_u32(out, static_cast<std::uint32_t>(s.name.size()));
        out += s.name;
        out.push_back(static_cast<char>(s.arity));
        out.push_back(s.symmetric ? 1 : 0);
    }
    return out;
}

std::string encode_under(const FinStructure& s, const std::vector<int>& perm) {
    std::string out = signature_fingerprint(s.signature());
    append_u32(out, static_cast<std::uint32_t>(s.size()));
    for (int sym = 0; sym < s.signature().size(); ++sym) {
        const auto& def = s.signature().symbol(sym);
        std::vector<TupleCode> codes;
        codes.reserve(s.stored(sym).size());
        for (TupleCode c : s.stored(sym)) {
            std::vector<int> t = decode_tuple(c, def.arity);
            for (int& v : t) v = perm[static_cast<std::size_t>(v)];
            if (def.symmetric) std::sort(t.begin(), t.end());
            codes.push_back(encode_tuple(t));
        }
        std::sort(codes.begin(), codes.end());
        append_u32(out, static_cast<std::uint32_t>(codes.size()));
        for (TupleCode c : codes) append_u64(out, c);
    }
    return out;
}

struct SearchState {
    const FinStructure& s;
    std::optional<std::string> best{};
    std::vector<int> best_perm{};
    std::vector<std::vector<int>> gens{};

    // Orbit partition of the generators that fix `path` pointwise.
    std::vector<int> orbits_fixing(const std::vector<int>& path) const {
        const int n = s.size();
        std::vector<int> parent(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (const auto& g : gens) {
            bool fixes = true;
            for (int p : path)
                if (g[static_cast<std::size_t>(p)] != p) { fixes = false; break; }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(g[static_cast<std::size_t>(v)]);
                if (a != b) parent[static_cast<std::size_t>(a)] = b;
            }
        }
        std::vector<int> rep(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) rep[static_cast<std::size_t>(v)] = find(v);
        return rep;
    }

    void visit_leaf(const std::vector<std::vector<int>>& cells) {
        const int n = s.size();
        std::vector<int> perm(static_cast<std::size_t>(n));
        int label = 0;
        for (const auto& cell : cells) perm[static_cast<std::size_t>(cell[0])] = label++;
        std::string enc = encode_under(s, perm);
        if (!best || enc < *best) {
            best = std::move(enc);
            best_perm = perm;
            return;
        }
        if (enc == *best) {
            // Two relabelings with the same image compose to an automorphism.
            std::vector<int> inv(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(best_perm[static_cast<std::size_t>(v)])] = v;
            std::vector<int> aut(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) aut[static_cast<std::size_t>(v)] = inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
            bool identity = true;
            for (int v = 0; v < n; ++v)
                if (aut[static_cast<std::size_t>(v)] != v) { identity = false; break; }
            if (!identity) gens.push_back(std::move(aut));
        }
    }

    void search(std::vector<std::vector<int>> cells, std::vector<int>& path) {
        cells = refine_ordered(s, std::move(cells));
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) { target = i; break; }
        if (target == cells.size()) {
            visit_leaf(cells);
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            const std::vector<int> rep = orbits_fixing(path);
            bool skip = false;
            for (int u : tried)
                if (rep[static_cast<std::size_t>(u)] == rep[static_cast<std::size_t>(v)]) { skip = true; break; }
            if (skip) continue;
            tried.push_back(v);

            std::vector<std::vector<int>> next;
            next.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != target) { next.push_back(cells[i]); continue; }
                next.push_back({v});
                std::vector<int> rest;
                for (int u : cells[i]) if (u != v) rest.push_back(u);
                next.push_back(std::move(rest));
            }
            path.push_back(v);
            search(std::move(next), path);
            path.pop_back();
        }
    }
};

}  // namespace

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

std::string labeled_encoding(const FinStructure& s) {
    std::vector<int> identity(static_cast<std::size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) identity[static_cast<std::size_t>(i)] = i;
    return encode_under(s, identity);
}

CanonicalResult canonicalize(const FinStructure& s) {
    CanonicalResult result;
    const int n = s.size();
    if (n == 0) {
        result.form.bytes = encode_under(s, {});
        return result;
    }
    SearchState state{s};
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    std::vector<int> path;
    state.search({all}, path);
    result.form.bytes = *state.best;
    result.labeling = state.best_perm;
    result.automorphisms = state.gens;
    return result;
}

CanonicalForm canonical_form(const FinStructure& s) { return canonicalize(s).form; }

bool isomorphic(const FinStructure& a, const FinStructure& b) {
    if (a.signature() != b.signature() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace homog
