#include "doctest.h"

#include "helpers.hpp"
#include "homog/canonical.hpp"
#include "homog/eqrel.hpp"
#include "homog/expansion.hpp"
#include "homog/generic.hpp"
#include "homog/zoo.hpp"

using namespace homog;

TEST_CASE("a single pair type only produces the trivial relations") {
    // Edgeless ternary structure: every ordered pair has the same type, so
    // the only unions are equality and the total relation, both trivial.
    const FinStructure s(ternary_signature(), 6);
    const QfType p = point_type_over(s, {}, 0);
    const auto rep = search_definable_equivalence(s, {}, p);
    CHECK(rep.realization.size() == 6);
    CHECK(rep.realized_pair_types.size() == 1);
    CHECK(rep.candidates.empty());
}

TEST_CASE("two disjoint triangles yield the component relation") {
    FinStructure g(graph_signature(), 6);
    for (int base : {0, 3}) {
        g.add(0, {base, base + 1});
        g.add(0, {base, base + 2});
        g.add(0, {base + 1, base + 2});
    }
    const QfType p = point_type_over(g, {}, 0);
    const auto rep = search_definable_equivalence(g, {}, p);
    REQUIRE(rep.candidates.size() == 1);
    const auto& cand = rep.candidates[0];
    CHECK(cand.classes == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});

    SUBCASE("the candidate is invariant under discovered automorphisms") {
        const auto canon = canonicalize(g);
        auto related = [&](int x, int y) {
            if (x == y) return true;
            return g.has(0, {x, y});
        };
        for (const auto& aut : canon.automorphisms)
            for (int x = 0; x < 6; ++x)
                for (int y = 0; y < 6; ++y)
                    CHECK(related(x, y) == related(aut[static_cast<std::size_t>(x)],
                                                   aut[static_cast<std::size_t>(y)]));
    }
}

TEST_CASE("the hyperedge-through-a relation on a parity approximation is not transitive") {
    const FinStructure m = parity_approximation(30, 4);
    const QfType p = point_type_over(m, {0}, 1);
    const auto rep = search_definable_equivalence(m, {0}, p);
    // Two realized pair types over the parameter (hyperedge with it or not);
    // neither union survives the transitivity check on the approximation.
    CHECK(rep.realized_pair_types.size() == 2);
    CHECK(rep.candidates.empty());
}

TEST_CASE("a tetrahedron-free approximation carries no definable equivalence") {
    const Age age = forbidden_age(ternary_signature(), {catalog_structure("K4")});
    const auto g = grow_generic(age, 30, 21);
    const QfType p0 = point_type_over(g.structure, {}, 0);
    CHECK(search_definable_equivalence(g.structure, {}, p0).candidates.empty());
    const QfType p1 = point_type_over(g.structure, {0}, 1);
    CHECK(search_definable_equivalence(g.structure, {0}, p1).candidates.empty());
}

TEST_CASE("too few realizations is an input error") {
    const FinStructure tiny(ternary_signature(), 3);
    const QfType p = point_type_over(tiny, {}, 0);
    CHECK_THROWS_AS(search_definable_equivalence(tiny, {}, p), std::invalid_argument);
}
