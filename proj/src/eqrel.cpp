#include "homog/eqrel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "homog/expansion.hpp"

namespace homog {

EqrelReport search_definable_equivalence(const FinStructure& s, const std::vector<int>& params,
                                         const QfType& p, Budget* budget) {
    std::set<int> param_set(params.begin(), params.end());
    if (param_set.size() != params.size())
        throw std::invalid_argument("search_definable_equivalence: repeated parameter");
    for (int a : params)
        if (a < 0 || a >= s.size())
            throw std::invalid_argument("search_definable_equivalence: parameter out of range");

    EqrelReport report;
    for (int x = 0; x < s.size(); ++x) {
        if (param_set.count(x)) continue;
        if (point_type_over(s, params, x) == p) report.realization.push_back(x);
    }
    const int m = static_cast<int>(report.realization.size());
    if (m < 4)
        throw std::invalid_argument("search_definable_equivalence: type realized by fewer than 4 elements");

    // Complete 2-types over the parameters on ordered pairs of the set.
    std::map<QfType, int> type_id;
    std::vector<QfType> types;
    std::vector<std::vector<int>> pair_type(static_cast<std::size_t>(m),
                                            std::vector<int>(static_cast<std::size_t>(m), -1));
    std::vector<int> tuple = params;
    tuple.push_back(0);
    tuple.push_back(0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            if (budget) budget->tick();
            tuple[params.size()] = report.realization[static_cast<std::size_t>(i)];
            tuple[params.size() + 1] = report.realization[static_cast<std::size_t>(j)];
            QfType t = qf_type(s, tuple);
            auto [it, fresh] = type_id.emplace(std::move(t), static_cast<int>(types.size()));
            if (fresh) types.push_back(it->first);
            pair_type[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = it->second;
        }
    report.realized_pair_types = types;
    const int k = static_cast<int>(types.size());

    // Transpose involution on realized types (well defined: the type of
    // (x, y) over the parameters determines the type of (y, x)).
    std::vector<int> transpose(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < m && std::find(transpose.begin(), transpose.end(), -1) != transpose.end(); ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const int t = pair_type[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (transpose[static_cast<std::size_t>(t)] == -1)
                transpose[static_cast<std::size_t>(t)] =
                    pair_type[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }

    // Transpose orbits; unions are built from whole orbits so the relation is
    // symmetric by construction.
    std::vector<int> orbit_of(static_cast<std::size_t>(k), -1);
    std::vector<std::vector<int>> orbits;
    for (int t = 0; t < k; ++t) {
        if (orbit_of[static_cast<std::size_t>(t)] != -1) continue;
        const int o = static_cast<int>(orbits.size());
        orbit_of[static_cast<std::size_t>(t)] = o;
        std::vector<int> members{t};
        const int tt = transpose[static_cast<std::size_t>(t)];
        if (tt != t) {
            orbit_of[static_cast<std::size_t>(tt)] = o;
            members.push_back(tt);
        }
        orbits.push_back(std::move(members));
    }

    const int num_orbits = static_cast<int>(orbits.size());
    if (num_orbits > 20)
        throw budget_exceeded("too many 2-type orbits to enumerate unions");

    for (std::uint64_t mask = 1; mask + 1 < (1ull << num_orbits); ++mask) {
        if (budget) budget->tick();
        std::vector<bool> in_union(static_cast<std::size_t>(k), false);
        for (int o = 0; o < num_orbits; ++o)
            if (mask & (1ull << o))
                for (int t : orbits[static_cast<std::size_t>(o)])
                    in_union[static_cast<std::size_t>(t)] = true;

        auto related = [&](int i, int j) -> bool {
            if (i == j) return true;
            return in_union[static_cast<std::size_t>(
                pair_type[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])];
        };

        bool transitive = true;
        for (int i = 0; i < m && transitive; ++i)
            for (int j = 0; j < m && transitive; ++j) {
                if (!related(i, j) || i == j) continue;
                for (int l = 0; l < m; ++l)
                    if (related(j, l) && !related(i, l)) { transitive = false; break; }
            }
        if (!transitive) continue;

        // Classes via union-find on the (now symmetric, transitive) relation.
        std::vector<int> parent(static_cast<std::size_t>(m));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (related(i, j)) {
                    const int a = find(i), b = find(j);
                    if (a != b) parent[static_cast<std::size_t>(a)] = b;
                }
        std::map<int, std::vector<int>> groups;
        for (int i = 0; i < m; ++i)
            groups[find(i)].push_back(report.realization[static_cast<std::size_t>(i)]);
        bool big_class = false;
        for (const auto& [root, members] : groups) big_class |= members.size() > 1;
        if (groups.size() < 2 || !big_class) continue;  // trivial

        EquivalenceCandidate cand;
        for (int t = 0; t < k; ++t)
            if (in_union[static_cast<std::size_t>(t)]) cand.types.push_back(types[static_cast<std::size_t>(t)]);
        std::sort(cand.types.begin(), cand.types.end());
        for (auto& [root, members] : groups) cand.classes.push_back(std::move(members));
        std::sort(cand.classes.begin(), cand.classes.end());
        report.candidates.push_back(std::move(cand));
    }
    return report;
}

}  // namespace homog
