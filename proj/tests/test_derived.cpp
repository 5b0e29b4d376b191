#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "homog/canonical.hpp"
#include "homog/tournaments.hpp"
#include "homog/zoo.hpp"

using namespace homog;

TEST_CASE("the catalog") {
    CHECK(catalog_structure("C1").stored_count(0) == 1);
    CHECK(catalog_structure("C3").stored_count(0) == 3);
    CHECK(catalog_structure("K4").stored_count(0) == 4);
    CHECK(catalog_structure("K4_minus").stored_count(0) == 3);
    CHECK(isomorphic(catalog_structure("K4_minus"), catalog_structure("C3")));
    CHECK_THROWS_AS(catalog_structure("K5"), std::invalid_argument);
}

TEST_CASE("the dense ternary family") {
    SUBCASE("exceptional triples of the first member") {
        const FinStructure h3 = build_H_n(3);
        CHECK(h3.size() == 4);
        std::set<std::vector<int>> gaps;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    if (a == b || a == c || b == c) continue;
                    if (!h3.has(0, {a, b, c})) gaps.insert({a, b, c});
                }
        CHECK(gaps == std::set<std::vector<int>>{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}});
    }
    SUBCASE("3-irreducibility") {
        for (int n = 3; n <= 6; ++n) CHECK(k_irreducible(build_H_n(n), 3));
    }
    SUBCASE("the rotation fixing 0 is an automorphism") {
        for (int n = 3; n <= 8; ++n) {
            const FinStructure h = build_H_n(n);
            std::vector<int> rot(static_cast<std::size_t>(n) + 1);
            rot[0] = 0;
            for (int k = 1; k < n; ++k) rot[static_cast<std::size_t>(k)] = k + 1;
            rot[static_cast<std::size_t>(n)] = 1;
            CHECK(h.relabeled(rot) == h);
        }
    }
    SUBCASE("n below 3 is rejected") {
        CHECK_THROWS_AS(build_H_n(2), std::invalid_argument);
    }
}

TEST_CASE("parity hypergraphs") {
    SUBCASE("complete graph on four vertices gives the full quadruple") {
        const FinStructure k4_graph = testing::graph_from_mask(4, 0x3f);
        CHECK(isomorphic(build_parity_hypergraph(k4_graph), catalog_structure("K4")));
    }
    SUBCASE("edgeless graphs give edgeless hypergraphs") {
        CHECK(build_parity_hypergraph(FinStructure(graph_signature(), 5)).total_stored() == 0);
    }
    SUBCASE("a single edge on three vertices gives one hyperedge") {
        FinStructure g(graph_signature(), 3);
        g.add(0, {0, 1});
        CHECK(build_parity_hypergraph(g).stored_count(0) == 1);
    }
    SUBCASE("outputs are always symmetric") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            FinStructure g(graph_signature(), 6);
            CounterRng rng(seed, 3);
            for (int a = 0; a < 6; ++a)
                for (int b = a + 1; b < 6; ++b)
                    if (rng.coin()) g.add(0, {a, b});
            CHECK(is_symmetric(build_parity_hypergraph(g)));
        }
    }
    SUBCASE("non-graph input is rejected") {
        CHECK_THROWS_AS(build_parity_hypergraph(catalog_structure("C1")), std::invalid_argument);
    }
}

TEST_CASE("random tournaments") {
    CHECK(random_tournament(0, 1).size() == 0);
    CHECK(random_tournament(5, 9) == random_tournament(5, 9));
    const FinStructure t = random_tournament(7, 5);
    CHECK(is_tournament(t));
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) CHECK(t.has(0, {a, b}) != t.has(0, {b, a}));
}

TEST_CASE("tuple equivalence on tournaments") {
    FinStructure cyc(tournament_signature(), 3);
    cyc.add(0, {0, 1});
    cyc.add(0, {1, 2});
    cyc.add(0, {2, 0});
    FinStructure tr(tournament_signature(), 3);
    tr.add(0, {0, 1});
    tr.add(0, {0, 2});
    tr.add(0, {1, 2});

    SUBCASE("identity") {
        const std::vector<int> u{0, 1, 2};
        CHECK(approx_n_equal(cyc, u, u));
    }
    SUBCASE("a cyclic triple equals its swap under reversal") {
        CHECK(approx_n_equal(cyc, std::vector<int>{0, 1, 2}, std::vector<int>{0, 2, 1}));
    }
    SUBCASE("a transitive triple differs from its transposition") {
        CHECK_FALSE(approx_n_equal(tr, std::vector<int>{0, 1, 2}, std::vector<int>{1, 0, 2}));
    }
    SUBCASE("equality patterns must match") {
        CHECK_FALSE(approx_n_equal(cyc, std::vector<int>{0, 0}, std::vector<int>{0, 1}));
    }
    SUBCASE("non-tournament input is rejected") {
        FinStructure bad(tournament_signature(), 2);
        CHECK_THROWS_AS(approx_n_equal(bad, std::vector<int>{0, 1}, std::vector<int>{1, 0}),
                        std::invalid_argument);
    }
}

TEST_CASE("the tournament reduct") {
    SUBCASE("cyclic triples fill one class, transitive triples split into reversal pairs") {
        FinStructure cyc(tournament_signature(), 3);
        cyc.add(0, {0, 1});
        cyc.add(0, {1, 2});
        cyc.add(0, {2, 0});
        const FinStructure rc = tournament_reduct(cyc);
        CHECK(rc.stored_count(0) == 6);  // R1 takes all orderings
        CHECK(rc.stored_count(1) + rc.stored_count(2) + rc.stored_count(3) == 0);

        FinStructure tr(tournament_signature(), 3);
        tr.add(0, {0, 1});
        tr.add(0, {0, 2});
        tr.add(0, {1, 2});
        const FinStructure rt = tournament_reduct(tr);
        CHECK(rt.stored_count(0) == 0);
        CHECK(rt.stored_count(1) == 2);
        CHECK(rt.stored_count(2) == 2);
        CHECK(rt.stored_count(3) == 2);
    }
    SUBCASE("every ordered distinct triple satisfies exactly one relation") {
        const FinStructure t = random_tournament(6, 4);
        const FinStructure r = tournament_reduct(t);
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                for (int c = 0; c < 6; ++c) {
                    if (a == b || a == c || b == c) continue;
                    int count = 0;
                    for (int sym = 0; sym < 4; ++sym)
                        if (r.has(sym, {a, b, c})) ++count;
                    CHECK(count == 1);
                }
    }
    SUBCASE("a mixed tournament realizes all four classes") {
        const FinStructure t = random_tournament(5, 2);
        const FinStructure r = tournament_reduct(t);
        int classes = 0;
        for (int sym = 0; sym < 4; ++sym)
            if (r.stored_count(sym) > 0) ++classes;
        CHECK(classes == 4);
    }
    SUBCASE("edge reversal leaves the reduct unchanged") {
        const FinStructure t = random_tournament(6, 8);
        FinStructure rev(tournament_signature(), 6);
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                if (a != b && t.has(0, {a, b})) rev.add(0, {b, a});
        CHECK(tournament_reduct(t) == tournament_reduct(rev));
    }
    SUBCASE("isomorphic tournaments give isomorphic reducts") {
        const FinStructure t = random_tournament(6, 8);
        const std::vector<int> perm{3, 0, 5, 1, 4, 2};
        CHECK(isomorphic(tournament_reduct(t), tournament_reduct(t.relabeled(perm))));
    }
    SUBCASE("too-small tournaments are rejected") {
        CHECK_THROWS_AS(tournament_reduct(random_tournament(2, 1)), std::invalid_argument);
    }
}

TEST_CASE("the tournament lifting oracle") {
    const Age age = tournament_reduct_age();
    SUBCASE("actual reducts are permitted") {
        for (std::uint64_t seed = 1; seed <= 6; ++seed)
            CHECK(age.is_permitted(tournament_reduct(random_tournament(5, seed))));
    }
    SUBCASE("an uncovered triple is forbidden") {
        CHECK_FALSE(age.is_permitted(FinStructure(reduct_signature(), 3)));
    }
    SUBCASE("a doubly covered triple is forbidden") {
        FinStructure bad = tournament_reduct(random_tournament(3, 1));
        // add a second class to one ordering
        for (int sym = 0; sym < 4; ++sym) {
            if (!bad.has(sym, {0, 1, 2})) {
                bad.add(sym, {0, 1, 2});
                break;
            }
        }
        CHECK_FALSE(age.is_permitted(bad));
    }
    SUBCASE("the local catalog holds the four triple shapes") {
        CHECK(age.catalog().restricted(3));
        CHECK(age.catalog().pattern_count(3) == 4);
    }
    SUBCASE("the lift witness reproduces the input") {
        const FinStructure r = tournament_reduct(random_tournament(6, 12));
        const auto witness = TournamentLiftOracle::lift(r);
        REQUIRE(witness.has_value());
        CHECK(tournament_reduct(*witness) == r);
    }
}
