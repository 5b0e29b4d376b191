#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "homog/canonical.hpp"
#include "homog/expansion.hpp"
#include "homog/rng.hpp"
#include "homog/zoo.hpp"

using namespace homog;

TEST_CASE("expansion with no parameters is the structure itself") {
    const FinStructure m = testing::seeded_hypergraph(6, 3);
    const QfType p = point_type_over(m, {}, 0);
    const auto mp = build_M_P(m, {}, {p});
    CHECK(mp.info.signature == m.signature());
    CHECK(mp.structure == m);
    SUBCASE("its reduct has the empty vocabulary") {
        const FinStructure minus = reduct_M_P_minus(mp);
        CHECK(minus.signature().size() == 0);
        CHECK(minus.size() == m.size());
    }
}

TEST_CASE("one-parameter expansion of a parity hypergraph") {
    const FinStructure m = parity_approximation(20, 5);
    const QfType p = point_type_over(m, {0}, 1);
    const auto mp = build_M_P(m, {0}, {p});

    SUBCASE("universe is everything else") {
        CHECK(mp.universe.size() == 19);
    }
    SUBCASE("derived symbols of a ternary base are binary and unary") {
        bool saw_binary = false;
        for (int sym = mp.info.base_symbol_count; sym < mp.info.signature.size(); ++sym) {
            const auto& def = mp.info.signature.symbol(sym);
            CHECK(def.arity <= 2);
            if (def.arity == 2) saw_binary = true;
        }
        CHECK(saw_binary);
    }
    SUBCASE("binary derived relations record hyperedges through the parameter") {
        // Pick the first binary derived symbol and compare against the base.
        int qsym = -1;
        for (int sym = mp.info.base_symbol_count; sym < mp.info.signature.size(); ++sym)
            if (mp.info.signature.symbol(sym).arity == 2) { qsym = sym; break; }
        REQUIRE(qsym >= 0);
        for (int i = 0; i < mp.structure.size(); ++i)
            for (int j = 0; j < mp.structure.size(); ++j) {
                if (i == j) continue;
                const int x = mp.universe[static_cast<std::size_t>(i)];
                const int y = mp.universe[static_cast<std::size_t>(j)];
                CHECK(mp.structure.has(qsym, {i, j}) == m.has(0, {x, y, 0}));
            }
    }
    SUBCASE("the reduct drops the base symbol") {
        const FinStructure minus = reduct_M_P_minus(mp);
        CHECK(minus.signature().size() == mp.info.signature.size() - 1);
        CHECK(minus.signature().max_arity_used() <= 2);
    }
}

TEST_CASE("type correspondence between the expansion and the ambient structure") {
    const FinStructure m = parity_approximation(24, 9);
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        CounterRng rng(seed, 77);
        const int pcount = static_cast<int>(rng.below(3));
        std::set<int> pset;
        while (static_cast<int>(pset.size()) < pcount)
            pset.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(m.size()))));
        const std::vector<int> params(pset.begin(), pset.end());
        std::set<QfType> realized;
        for (int x = 0; x < m.size(); ++x)
            if (!pset.count(x)) realized.insert(point_type_over(m, params, x));
        std::vector<QfType> types(realized.begin(), realized.end());
        const auto mp = build_M_P(m, params, {types[rng.below(types.size())]});
        if (mp.universe.size() < 2) continue;

        const int len = 1 + static_cast<int>(rng.below(3));
        const int u = static_cast<int>(mp.universe.size());
        std::vector<int> b1, b2;
        for (int i = 0; i < len; ++i) {
            b1.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(u))));
            b2.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(u))));
        }
        auto ambient = [&](const std::vector<int>& b) {
            std::vector<int> t;
            for (int i : b) t.push_back(mp.universe[static_cast<std::size_t>(i)]);
            t.insert(t.end(), params.begin(), params.end());
            return t;
        };
        const bool inner = qf_type(mp.structure, b1) == qf_type(mp.structure, b2);
        const bool outer = qf_type(m, ambient(b1)) == qf_type(m, ambient(b2));
        CHECK(inner == outer);
    }
}

TEST_CASE("expansion input validation") {
    const FinStructure m = testing::seeded_hypergraph(5, 1);
    SUBCASE("unrealized types are rejected") {
        QfType fake = point_type_over(m, {0}, 1);
        fake.atoms.emplace_back(0, encode_tuple(std::vector<int>{0, 1, 1}));
        CHECK_THROWS_AS(build_M_P(m, {0}, {fake}), std::invalid_argument);
    }
    SUBCASE("repeated parameters are rejected") {
        const QfType p = point_type_over(m, {0, 0}, 1);
        CHECK_THROWS_AS(build_M_P(m, {0, 0}, {p}), std::invalid_argument);
    }
    SUBCASE("empty type set is rejected") {
        CHECK_THROWS_AS(build_M_P(m, {0}, {}), std::invalid_argument);
    }
}
