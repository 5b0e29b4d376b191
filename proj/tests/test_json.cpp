#include "doctest.h"

#include "helpers.hpp"
#include "homog/generic.hpp"
#include "homog/json_io.hpp"
#include "homog/suites.hpp"
#include "homog/tournaments.hpp"
#include "homog/zoo.hpp"

using namespace homog;

TEST_CASE("structure round trips") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const FinStructure s = testing::seeded_hypergraph(6, seed);
        CHECK(structure_from_json(structure_to_json(s)) == s);
    }
    const FinStructure h = build_H_n(4);
    CHECK(structure_from_json(structure_to_json(h)) == h);
}

TEST_CASE("the loader expands and validates") {
    SUBCASE("symmetric tuples normalize to one orbit representative") {
        const json j = {
            {"signature", {{{"name", "R"}, {"arity", 3}, {"symmetric", true}}}},
            {"size", 4},
            {"relations", {{"R", {{2, 0, 1}, {1, 2, 0}}}}},
        };
        const FinStructure s = structure_from_json(j);
        CHECK(s.stored_count(0) == 1);
        CHECK(s.has(0, {0, 1, 2}));
    }
    SUBCASE("reflexive tuples are rejected at parse time") {
        const json j = {
            {"signature", {{{"name", "R"}, {"arity", 3}, {"symmetric", true}}}},
            {"size", 3},
            {"relations", {{"R", {{0, 0, 1}}}}},
        };
        CHECK_THROWS_AS(structure_from_json(j), std::invalid_argument);
    }
    SUBCASE("unknown symbols are rejected") {
        const json j = {
            {"signature", {{{"name", "R"}, {"arity", 3}, {"symmetric", true}}}},
            {"size", 3},
            {"relations", {{"S", {{0, 1, 2}}}}},
        };
        CHECK_THROWS_AS(structure_from_json(j), std::invalid_argument);
    }
    SUBCASE("arity mismatches are rejected") {
        const json j = {
            {"signature", {{{"name", "R"}, {"arity", 3}, {"symmetric", true}}}},
            {"size", 3},
            {"relations", {{"R", {{0, 1}}}}},
        };
        CHECK_THROWS_AS(structure_from_json(j), std::invalid_argument);
    }
}

TEST_CASE("age round trips") {
    SUBCASE("forbidden-list age") {
        const Age age = forbidden_age(ternary_signature(),
                                      {catalog_structure("C1"), catalog_structure("C3")});
        const Age back = age_from_json(age_to_json(age));
        CHECK(back.signature() == age.signature());
        CHECK(back.mode() == age.mode());
        REQUIRE(back.forbidden().size() == age.forbidden().size());
        for (std::size_t i = 0; i < age.forbidden().size(); ++i)
            CHECK(back.forbidden()[i] == age.forbidden()[i]);
    }
    SUBCASE("oracle ages keep their kind") {
        const Age reduct = tournament_reduct_age();
        const Age back = age_from_json(age_to_json(reduct));
        REQUIRE(back.oracle() != nullptr);
        CHECK(back.oracle()->kind() == "tournament-reduct");
        CHECK(back.catalog().restricted(3));

        const FinStructure target = testing::seeded_hypergraph(6, 2);
        const Age embed(ternary_signature(), MorphismMode::embedding, {},
                        std::make_shared<EmbedsIntoOracle>(target));
        const Age embed_back = age_from_json(age_to_json(embed));
        REQUIRE(embed_back.oracle() != nullptr);
        CHECK(embed_back.oracle()->kind() == "embeds-into");
    }
}

TEST_CASE("growth logs round trip and replay") {
    const Age age = forbidden_age(ternary_signature(), {catalog_structure("K4")});
    const auto g = grow_generic(age, 15, 8);
    const auto back = growth_log_from_json(growth_log_to_json(g));
    CHECK(back.structure == g.structure);
    CHECK(back.seed == g.seed);
    CHECK(back.log.size() == g.log.size());
}

TEST_CASE("suite reports serialize deterministically") {
    const auto a = run_suite("lemma-7.1", 5);
    const auto b = run_suite("lemma-7.1", 5);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.status() == "pass");
}
