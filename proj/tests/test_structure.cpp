#include "doctest.h"

#include "helpers.hpp"
#include "homog/partition.hpp"
#include "homog/qf_type.hpp"
#include "homog/tournaments.hpp"
#include "homog/zoo.hpp"

using namespace homog;

TEST_CASE("signature validation") {
    CHECK_THROWS_AS(Signature({{"R", 0, false}}), std::invalid_argument);
    CHECK_THROWS_AS(Signature({{"R", 5, false}}), std::invalid_argument);  // default bound 4
    CHECK_THROWS_AS(Signature({{"R", 3, false}, {"R", 2, false}}), std::invalid_argument);
    CHECK_NOTHROW(Signature({{"R", 5, false}}, 8));
}

TEST_CASE("tuples are irreflexive and stored symmetrically") {
    FinStructure s(ternary_signature(), 4);
    CHECK_THROWS_AS(s.add(0, {0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(s.add(0, {0, 1, 9}), std::invalid_argument);
    s.add(0, {2, 0, 1});
    CHECK(s.has(0, {0, 1, 2}));
    CHECK(s.has(0, {1, 2, 0}));
    CHECK(s.stored_count(0) == 1);  // one representative per orbit
}

TEST_CASE("induced substructures") {
    const FinStructure h3 = build_H_n(3);
    SUBCASE("full subset is the structure itself") {
        CHECK(h3.induced({0, 1, 2, 3}) == h3);
    }
    SUBCASE("3-subsets of C3 carry at most one hyperedge") {
        const FinStructure c3 = catalog_structure("C3");
        for (int drop = 0; drop < 4; ++drop) {
            std::vector<int> sub;
            for (int v = 0; v < 4; ++v)
                if (v != drop) sub.push_back(v);
            CHECK(c3.induced(sub).stored_count(0) <= 1);
        }
    }
    SUBCASE("3-subsets of K4 are single-hyperedge triangles") {
        const FinStructure k4 = catalog_structure("K4");
        for (int drop = 0; drop < 4; ++drop) {
            std::vector<int> sub;
            for (int v = 0; v < 4; ++v)
                if (v != drop) sub.push_back(v);
            CHECK(k4.induced(sub).stored_count(0) == 1);
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(h3.induced({0, 7}), std::invalid_argument);
        CHECK_THROWS_AS(h3.induced({0, 0}), std::invalid_argument);
    }
}

TEST_CASE("qf types") {
    SUBCASE("empty tuple gives the empty type") {
        const FinStructure h3 = build_H_n(3);
        const QfType t = qf_type(h3, {});
        CHECK(t.arity == 0);
        CHECK(t.atoms.empty());
    }
    SUBCASE("cyclic shift of a 3-cycle preserves the type") {
        FinStructure t(tournament_signature(), 3);
        t.add(0, {0, 1});
        t.add(0, {1, 2});
        t.add(0, {2, 0});
        CHECK(qf_type(t, {0, 1, 2}) == qf_type(t, {1, 2, 0}));
    }
    SUBCASE("edge vs non-edge triples of the dense family differ") {
        const FinStructure h3 = build_H_n(3);
        CHECK(qf_type(h3, {0, 1, 2}) != qf_type(h3, {1, 2, 3}));
    }
    SUBCASE("equality pattern distinguishes repeats") {
        const FinStructure h3 = build_H_n(3);
        CHECK(qf_type(h3, {1, 1}) != qf_type(h3, {1, 2}));
    }
}

TEST_CASE("is_symmetric") {
    CHECK(is_symmetric(build_parity_hypergraph(testing::graph_from_mask(4, 0x2b))));
    CHECK_FALSE(is_symmetric(build_H_n(3)));
    CHECK(is_symmetric(FinStructure(ternary_signature(false), 5)));
}

TEST_CASE("k-irreducibility") {
    CHECK(k_irreducible(build_H_n(3), 3));
    CHECK(k_irreducible(build_H_n(5), 3));
    CHECK_FALSE(k_irreducible(catalog_structure("K4_minus"), 3));
    CHECK(k_irreducible(catalog_structure("K4_minus"), 2));
    const auto witness = k_irreducibility_witness(catalog_structure("K4_minus"), 3);
    REQUIRE(witness.has_value());
    CHECK(witness->size() == 3);
}

TEST_CASE("refine_partition") {
    SUBCASE("dense family splits off its distinguished vertex") {
        const auto part = refine_partition(build_H_n(3));
        REQUIRE(part.classes.size() == 2);
        const bool zero_alone = (part.classes[0] == std::vector<int>{0} &&
                                 part.classes[1] == std::vector<int>{1, 2, 3}) ||
                                (part.classes[1] == std::vector<int>{0} &&
                                 part.classes[0] == std::vector<int>{1, 2, 3});
        CHECK(zero_alone);
    }
    SUBCASE("vertex-transitive cases stay whole") {
        CHECK(refine_partition(catalog_structure("K4")).classes.size() == 1);
        CHECK(refine_partition(FinStructure(ternary_signature(), 5)).classes.size() == 1);
    }
}
