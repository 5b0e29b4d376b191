#include "homog/zoo.hpp"

#include <stdexcept>

#include "homog/generic.hpp"

namespace homog {

FinStructure catalog_structure(const std::string& name) {
    FinStructure s(ternary_signature(), 4);
    if (name == "C1") {
        s.add(0, {0, 1, 2});
    } else if (name == "C3") {
        s.add(0, {0, 1, 2});
        s.add(0, {0, 1, 3});
        s.add(0, {0, 2, 3});
    } else if (name == "K4") {
        s.add(0, {0, 1, 2});
        s.add(0, {0, 1, 3});
        s.add(0, {0, 2, 3});
        s.add(0, {1, 2, 3});
    } else if (name == "K4_minus") {
        s.add(0, {0, 1, 3});
        s.add(0, {0, 2, 3});
        s.add(0, {1, 2, 3});
    } else {
        throw std::invalid_argument("catalog: unknown name '" + name + "'");
    }
    return s;
}

FinStructure build_H_n(int n) {
    if (n < 3) throw std::invalid_argument("build_H_n: n must be >= 3");
    FinStructure s(ternary_signature(false), n + 1);
    auto is_gap = [n](int a, int b, int c) {
        if (a != 0 || b == 0) return false;
        return (b < n && c == b + 1) || (b == n && c == 1);
    };
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            for (int c = 0; c <= n; ++c) {
                if (a == b || a == c || b == c) continue;
                if (!is_gap(a, b, c)) s.add(0, {a, b, c});
            }
    return s;
}

FinStructure parity_approximation(int steps, std::uint64_t seed) {
    const Age graphs = forbidden_age(graph_signature(), {});
    return build_parity_hypergraph(grow_generic(graphs, steps, seed, 2).structure);
}

FinStructure build_parity_hypergraph(const FinStructure& g) {
    if (g.signature().size() != 1 || g.signature().symbol(0).arity != 2 ||
        !g.signature().symbol(0).symmetric)
        throw std::invalid_argument("build_parity_hypergraph: input must be a graph");
    FinStructure h(ternary_signature(), g.size());
    for (int a = 0; a < g.size(); ++a)
        for (int b = a + 1; b < g.size(); ++b)
            for (int c = b + 1; c < g.size(); ++c) {
                const int edges = (g.has(0, {a, b}) ? 1 : 0) + (g.has(0, {a, c}) ? 1 : 0) +
                                  (g.has(0, {b, c}) ? 1 : 0);
                if (edges % 2 == 1) h.add(0, {a, b, c});
            }
    return h;
}

}  // namespace homog
