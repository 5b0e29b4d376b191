#include "doctest.h"

#include "helpers.hpp"
#include "homog/canonical.hpp"
#include "homog/zoo.hpp"

using namespace homog;
using testing::brute_force_morphism;

TEST_CASE("embedding search agrees with exhaustive injection enumeration") {
    SUBCASE("all 3-vertex single-ternary structures, both modes") {
        for (std::uint32_t am = 0; am < 64; am += 3)
            for (std::uint32_t bm = 0; bm < 64; bm += 5) {
                const FinStructure a = testing::ternary3_from_mask(am);
                const FinStructure b = testing::ternary3_from_mask(bm);
                for (const auto mode :
                     {MorphismMode::embedding, MorphismMode::injective_homomorphism}) {
                    const bool brute = brute_force_morphism(a, b, mode).has_value();
                    const bool engine = find_morphism(a, b, mode).has_value();
                    CHECK(brute == engine);
                }
            }
    }
    SUBCASE("seeded symmetric hypergraphs up to 5 vertices") {
        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
            const FinStructure a = testing::seeded_hypergraph(3 + static_cast<int>(seed % 2), seed);
            const FinStructure b = testing::seeded_hypergraph(5, seed + 500);
            for (const auto mode :
                 {MorphismMode::embedding, MorphismMode::injective_homomorphism}) {
                const bool brute = brute_force_morphism(a, b, mode).has_value();
                const bool engine = find_morphism(a, b, mode).has_value();
                CHECK(brute == engine);
            }
        }
    }
}

TEST_CASE("embedding facts about the named structures") {
    const FinStructure k4 = catalog_structure("K4");
    const FinStructure k4m = catalog_structure("K4_minus");
    SUBCASE("identity self-embedding of family members") {
        for (int n = 3; n <= 5; ++n)
            CHECK(find_embedding(build_H_n(n), build_H_n(n)).has_value());
    }
    SUBCASE("no embeddings between distinct family members") {
        CHECK_FALSE(find_embedding(build_H_n(3), build_H_n(4)).has_value());
        CHECK_FALSE(find_embedding(build_H_n(4), build_H_n(3)).has_value());
        CHECK_FALSE(find_embedding(build_H_n(3), build_H_n(5)).has_value());
    }
    SUBCASE("K4_minus does not embed into K4, but maps homomorphically") {
        CHECK_FALSE(find_embedding(k4m, k4).has_value());
        const auto hom = find_injective_homomorphism(k4m, k4);
        REQUIRE(hom.has_value());
    }
    SUBCASE("C1 finds no injective homomorphism into the edgeless quadruple") {
        CHECK_FALSE(find_injective_homomorphism(catalog_structure("C1"),
                                                FinStructure(ternary_signature(), 4))
                        .has_value());
    }
    SUBCASE("injective homomorphisms between family members agree with brute force") {
        // The relation-preserving map H_3 -> H_m exists (the non-edges of H_3
        // land on edges); only induced embeddings are ruled out.
        for (int m = 4; m <= 5; ++m) {
            const bool brute =
                brute_force_morphism(build_H_n(3), build_H_n(m),
                                     MorphismMode::injective_homomorphism)
                    .has_value();
            const bool engine =
                find_injective_homomorphism(build_H_n(3), build_H_n(m)).has_value();
            CHECK(engine == brute);
            CHECK(brute);
        }
    }
}

TEST_CASE("morphism properties") {
    SUBCASE("composition of embeddings embeds") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const FinStructure a = testing::seeded_hypergraph(3, seed);
            const FinStructure b = testing::seeded_hypergraph(4, seed + 100);
            const FinStructure c = testing::seeded_hypergraph(5, seed + 200);
            const auto ab = find_embedding(a, b);
            const auto bc = find_embedding(b, c);
            if (!ab || !bc) continue;
            // compose and verify directly
            std::vector<int> sub;
            for (int v = 0; v < a.size(); ++v)
                sub.push_back((*bc)[static_cast<std::size_t>((*ab)[static_cast<std::size_t>(v)])]);
            std::vector<int> sorted = sub;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> rank(sub.size());
            for (std::size_t i = 0; i < sub.size(); ++i)
                rank[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sub[i]) -
                                           sorted.begin());
            CHECK(c.induced(sorted) == a.relabeled(rank));
        }
    }
    SUBCASE("embedding implies injective homomorphism") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const FinStructure a = testing::seeded_hypergraph(4, seed);
            const FinStructure b = testing::seeded_hypergraph(5, seed + 300);
            if (find_embedding(a, b))
                CHECK(find_injective_homomorphism(a, b).has_value());
        }
    }
    SUBCASE("signature mismatch is an input error") {
        CHECK_THROWS_AS(find_embedding(FinStructure(graph_signature(), 2),
                                       FinStructure(ternary_signature(), 3)),
                        std::invalid_argument);
    }
}

TEST_CASE("free amalgams") {
    const FinStructure c1 = catalog_structure("C1");
    SUBCASE("amalgam of a structure with itself over everything is itself") {
        std::vector<std::pair<int, int>> all{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
        CHECK(free_amalgam(c1, c1, all) == c1);
    }
    SUBCASE("two one-hyperedge triangles over a shared pair") {
        FinStructure tri(ternary_signature(), 3);
        tri.add(0, {0, 1, 2});
        const auto glued = free_amalgam(tri, tri, {{0, 0}, {1, 1}});
        CHECK(glued.size() == 4);
        CHECK(glued.stored_count(0) == 2);
    }
    SUBCASE("triangle with hyperedge and edgeless triangle over a pair gives C1") {
        FinStructure tri(ternary_signature(), 3);
        tri.add(0, {0, 1, 2});
        const FinStructure edgeless(ternary_signature(), 3);
        const auto glued = free_amalgam(tri, edgeless, {{0, 0}, {1, 1}});
        CHECK(isomorphic(glued, c1));
    }
    SUBCASE("restrictions recover the pieces") {
        for (std::uint64_t seed = 1; seed <= 15; ++seed) {
            const FinStructure a = testing::seeded_hypergraph(4, seed);
            FinStructure b = testing::seeded_hypergraph(4, seed + 50);
            // align the overlap {0,1} structures (no ternary tuples fit in 2
            // vertices, so any pair works)
            const auto glued = free_amalgam(a, b, {{0, 0}, {1, 1}});
            CHECK(glued.induced({0, 1, 2, 3}) == a);
            const auto b_map = free_amalgam_b_map(a, b, {{0, 0}, {1, 1}});
            std::vector<int> b_image = b_map;
            std::sort(b_image.begin(), b_image.end());
            std::vector<int> rank(b_map.size());
            for (std::size_t i = 0; i < b_map.size(); ++i)
                rank[i] = static_cast<int>(std::lower_bound(b_image.begin(), b_image.end(),
                                                            b_map[i]) -
                                           b_image.begin());
            CHECK(glued.induced(b_image) == b.relabeled(rank));
        }
    }
    SUBCASE("mismatched overlap is an input error") {
        FinStructure tri(ternary_signature(), 3);
        tri.add(0, {0, 1, 2});
        const FinStructure empty3(ternary_signature(), 3);
        CHECK_THROWS_AS(free_amalgam(tri, empty3, {{0, 0}, {1, 1}, {2, 2}}),
                        std::invalid_argument);
    }
}
