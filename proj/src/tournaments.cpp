#include "homog/tournaments.hpp"

#include <algorithm>
#include <stdexcept>

#include "homog/rng.hpp"

namespace homog {

bool is_tournament(const FinStructure& t) {
    if (t.signature().size() != 1 || t.signature().symbol(0).arity != 2 ||
        t.signature().symbol(0).symmetric)
        return false;
    for (int a = 0; a < t.size(); ++a)
        for (int b = a + 1; b < t.size(); ++b) {
            const bool ab = t.has(0, {a, b});
            const bool ba = t.has(0, {b, a});
            if (ab == ba) return false;
        }
    return true;
}

FinStructure random_tournament(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_tournament: n must be >= 0");
    FinStructure t(tournament_signature(), n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            CounterRng rng(seed, (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b));
            if (rng.coin()) t.add(0, {a, b});
            else t.add(0, {b, a});
        }
    return t;
}

Signature reduct_signature() {
    return Signature({SymbolDef{"R1", 3, false}, SymbolDef{"R2", 3, false},
                      SymbolDef{"R3", 3, false}, SymbolDef{"R4", 3, false}});
}

namespace {

// Forward-edge bits of an ordered triple: (a->b, a->c, b->c).
int triple_bits(const FinStructure& t, int a, int b, int c) {
    return (t.has(0, {a, b}) ? 4 : 0) | (t.has(0, {a, c}) ? 2 : 0) | (t.has(0, {b, c}) ? 1 : 0);
}

// Reversal pairs {bits, ~bits} grouped into the four classes.
int class_of_bits(int bits) {
    switch (bits) {
        case 0b010: case 0b101: return 0;  // cyclic
        case 0b111: case 0b000: return 1;  // source, middle, sink
        case 0b110: case 0b001: return 2;  // source, sink, middle
        case 0b011: case 0b100: return 3;  // middle, source, sink
        default: throw std::logic_error("triple bits out of range");
    }
}

void check_tournament_arg(const FinStructure& t) {
    if (!is_tournament(t))
        throw std::invalid_argument("expected a tournament (complete antisymmetric binary structure)");
}

}  // namespace

int triple_class(const FinStructure& t, int a, int b, int c) {
    if (a == b || a == c || b == c)
        throw std::invalid_argument("triple_class: entries must be distinct");
    return class_of_bits(triple_bits(t, a, b, c));
}

bool approx_n_equal(const FinStructure& t, std::span<const int> u, std::span<const int> v) {
    check_tournament_arg(t);
    const std::size_t n = u.size();
    if (n != v.size() || n < 2)
        throw std::invalid_argument("approx_n_equal: tuples must have equal length >= 2");
    for (int x : u)
        if (x < 0 || x >= t.size()) throw std::invalid_argument("approx_n_equal: entry out of range");
    for (int x : v)
        if (x < 0 || x >= t.size()) throw std::invalid_argument("approx_n_equal: entry out of range");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((u[i] == u[j]) != (v[i] == v[j])) return false;

    bool direct = true, reversed = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (u[i] == u[j]) continue;
            const bool eu = t.has(0, {u[i], u[j]});
            if (eu != t.has(0, {v[i], v[j]})) direct = false;
            if (eu != t.has(0, {v[j], v[i]})) reversed = false;
        }
    return direct || reversed;
}

FinStructure tournament_reduct(const FinStructure& t) {
    check_tournament_arg(t);
    if (t.size() < 3)
        throw std::invalid_argument("tournament_reduct: need at least 3 vertices");
    FinStructure m(reduct_signature(), t.size());
    for (int a = 0; a < t.size(); ++a)
        for (int b = 0; b < t.size(); ++b)
            for (int c = 0; c < t.size(); ++c) {
                if (a == b || a == c || b == c) continue;
                m.add(triple_class(t, a, b, c), {a, b, c});
            }
    return m;
}

namespace {

// Expected class pattern of the unordered triple {x,y,z} (x<y<z) in the
// candidate structure: for each of the six orderings, the unique R holding on
// it, or reject if the orderings do not describe one lifted triple.
struct LiftSearch {
    const FinStructure& s;
    Budget* budget;
    FinStructure t;  // partial tournament
    bool done = false;

    explicit LiftSearch(const FinStructure& s_, Budget* budget_)
        : s(s_), budget(budget_), t(tournament_signature(), s_.size()) {}

    bool triple_matches(int x, int y, int z) const {
        const int orderings[6][3] = {{x, y, z}, {x, z, y}, {y, x, z}, {y, z, x}, {z, x, y}, {z, y, x}};
        for (const auto& o : orderings) {
            const int cls = class_of_bits(triple_bits(t, o[0], o[1], o[2]));
            for (int sym = 0; sym < 4; ++sym) {
                const bool want = sym == cls;
                if (s.has(sym, {o[0], o[1], o[2]}) != want) return false;
            }
        }
        return true;
    }

    // Orient pairs in lex order; when the last pair of a triple is decided,
    // compare the lifted classes against the candidate.
    bool rec(int a, int b) {
        if (budget) budget->tick();
        const int n = s.size();
        if (a >= n - 1) return true;
        const int next_a = (b + 1 < n) ? a : a + 1;
        const int next_b = (b + 1 < n) ? b + 1 : next_a + 1;
        for (int dir = 0; dir < 2; ++dir) {
            if (dir == 0) t.add(0, {a, b});
            else { t.remove(0, {a, b}); t.add(0, {b, a}); }
            bool ok = true;
            for (int z = 0; z < a && ok; ++z) ok = triple_matches(z, a, b);
            if (ok && rec(next_a, next_b)) return true;
        }
        t.remove(0, {b, a});
        return false;
    }
};

}  // namespace

std::optional<FinStructure> TournamentLiftOracle::lift(const FinStructure& s, Budget* budget) {
    if (s.signature() != reduct_signature())
        throw std::invalid_argument("lift: structure is not over the reduct vocabulary");
    if (s.size() < 3) {
        // Nothing to check below one triple; any orientation works.
        FinStructure t(tournament_signature(), s.size());
        if (s.size() == 2) t.add(0, {0, 1});
        if (s.total_stored() > 0) return std::nullopt;
        return t;
    }
    LiftSearch search(s, budget);
    if (search.rec(0, 1)) return search.t;
    return std::nullopt;
}

bool TournamentLiftOracle::permitted(const FinStructure& s, Budget* budget) const {
    if (s.size() > max_decidable_size())
        throw std::invalid_argument("tournament lift oracle: universe larger than 7");
    return lift(s, budget).has_value();
}

Age tournament_reduct_age() {
    Age age(reduct_signature(), MorphismMode::embedding, {},
            std::make_shared<TournamentLiftOracle>());
    // The four local triple shapes, read off the reducts of the tournaments
    // on three vertices.
    PatternCatalog catalog(reduct_signature());
    std::vector<CellPattern> shapes;
    for (int bits = 0; bits < 8; ++bits) {
        FinStructure t(tournament_signature(), 3);
        if (bits & 4) t.add(0, {0, 1}); else t.add(0, {1, 0});
        if (bits & 2) t.add(0, {0, 2}); else t.add(0, {2, 0});
        if (bits & 1) t.add(0, {1, 2}); else t.add(0, {2, 1});
        const FinStructure r = tournament_reduct(t);
        const int support[3] = {0, 1, 2};
        CellPattern p = catalog.read(r, support);
        if (std::find(shapes.begin(), shapes.end(), p) == shapes.end()) shapes.push_back(p);
    }
    std::sort(shapes.begin(), shapes.end(), [](const CellPattern& a, const CellPattern& b) {
        return a.masks < b.masks;
    });
    catalog.restrict_arity(3, std::move(shapes));
    age.set_catalog(std::move(catalog));
    return age;
}

}  // namespace homog
