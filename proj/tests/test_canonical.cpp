#include "doctest.h"

#include "helpers.hpp"
#include "homog/canonical.hpp"
#include "homog/qf_type.hpp"
#include "homog/zoo.hpp"

using namespace homog;

TEST_CASE("canonical form identifies isomorphism classes") {
    SUBCASE("relabelings agree") {
        const FinStructure c1 = catalog_structure("C1");
        const std::vector<int> perm{3, 1, 0, 2};
        CHECK(canonical_form(c1) == canonical_form(c1.relabeled(perm)));
    }
    SUBCASE("different edge counts differ") {
        CHECK(canonical_form(catalog_structure("C1")) != canonical_form(catalog_structure("C3")));
    }
    SUBCASE("different sizes differ") {
        CHECK(canonical_form(build_H_n(3)) != canonical_form(build_H_n(4)));
    }
    SUBCASE("K4 minus an edge is C3") {
        CHECK(canonical_form(catalog_structure("K4_minus")) == canonical_form(catalog_structure("C3")));
    }
}

TEST_CASE("canonical equality iff embeddings both ways at equal size") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const FinStructure a = testing::seeded_hypergraph(5, seed);
        const FinStructure b = testing::seeded_hypergraph(5, seed + 1000);
        const bool canon_equal = canonical_form(a) == canonical_form(b);
        const bool both_ways = find_embedding(a, b).has_value() && find_embedding(b, a).has_value();
        CHECK(canon_equal == both_ways);
    }
}

TEST_CASE("canonicalization handles rigid and highly symmetric inputs") {
    SUBCASE("edgeless structures of any size") {
        FinStructure big(ternary_signature(), 40);
        const auto result = canonicalize(big);
        CHECK(result.form.bytes.size() > 0);
        CHECK(result.labeling.size() == 40);
    }
    SUBCASE("labeling actually canonicalizes") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const FinStructure s = testing::seeded_hypergraph(6, seed);
            const auto result = canonicalize(s);
            CHECK(labeled_encoding(s.relabeled(result.labeling)) == result.form.bytes);
        }
    }
}

TEST_CASE("qf types are automorphism invariant") {
    // Brute-force the automorphisms of small structures and compare tuple
    // types along them.
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const FinStructure s = testing::seeded_hypergraph(5, seed);
        std::vector<int> perm{0, 1, 2, 3, 4};
        do {
            if (s.relabeled(perm) != s) continue;
            for (int a = 0; a < 5; ++a)
                for (int b = 0; b < 5; ++b) {
                    const std::vector<int> t{a, b, a};
                    const std::vector<int> imaged{perm[static_cast<std::size_t>(a)],
                                                  perm[static_cast<std::size_t>(b)],
                                                  perm[static_cast<std::size_t>(a)]};
                    CHECK(qf_type(s, t) == qf_type(s, imaged));
                }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("discovered automorphisms are genuine") {
    const FinStructure k4 = catalog_structure("K4");
    const auto result = canonicalize(k4);
    for (const auto& aut : result.automorphisms) CHECK(k4.relabeled(aut) == k4);
}
