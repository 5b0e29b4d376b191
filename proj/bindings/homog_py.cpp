#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homog/amalgamation.hpp"
#include "homog/canonical.hpp"
#include "homog/eqrel.hpp"
#include "homog/expansion.hpp"
#include "homog/generic.hpp"
#include "homog/json_io.hpp"
#include "homog/neighbours.hpp"
#include "homog/partition.hpp"
#include "homog/suites.hpp"
#include "homog/tournaments.hpp"
#include "homog/zoo.hpp"

namespace py = pybind11;

namespace {

using homog::json;

homog::FinStructure parse_structure(const std::string& text) {
    return homog::structure_from_json(json::parse(text));
}

homog::Age parse_age(const std::string& text) { return homog::age_from_json(json::parse(text)); }

std::string dump_structure(const homog::FinStructure& s) {
    return homog::structure_to_json(s).dump();
}

}  // namespace

PYBIND11_MODULE(_homog, m) {
    m.doc() = "Finite homogeneous-structure toolkit: ages, constraints, amalgamation, "
              "generic approximations and the verification suites.  Structures and ages "
              "travel as JSON strings.";

    // ------------------------------------------------------- structure core
    m.def("canonical_form", [](const std::string& s) {
        return homog::canonical_form(parse_structure(s)).hex();
    }, py::arg("structure"), "Hex canonical form: equal exactly for isomorphic structures.");

    m.def("refine_partition", [](const std::string& s) {
        return homog::refine_partition(parse_structure(s)).classes;
    }, py::arg("structure"));

    m.def("induced", [](const std::string& s, const std::vector<int>& subset) {
        return dump_structure(parse_structure(s).induced(subset));
    }, py::arg("structure"), py::arg("subset"));

    m.def("qf_type_key", [](const std::string& s, const std::vector<int>& tuple) {
        const auto t = homog::qf_type(parse_structure(s), tuple);
        return homog::qf_type_to_json(t).dump();
    }, py::arg("structure"), py::arg("tuple"),
       "Canonical key of the quantifier-free type of a tuple.");

    m.def("find_embedding", [](const std::string& a, const std::string& b) {
        return homog::find_embedding(parse_structure(a), parse_structure(b));
    }, py::arg("a"), py::arg("b"));

    m.def("find_injective_homomorphism", [](const std::string& a, const std::string& b) {
        return homog::find_injective_homomorphism(parse_structure(a), parse_structure(b));
    }, py::arg("a"), py::arg("b"));

    m.def("free_amalgam", [](const std::string& a, const std::string& b,
                             const std::vector<std::pair<int, int>>& overlap) {
        return dump_structure(homog::free_amalgam(parse_structure(a), parse_structure(b), overlap));
    }, py::arg("a"), py::arg("b"), py::arg("overlap"));

    m.def("is_symmetric", [](const std::string& s) { return homog::is_symmetric(parse_structure(s)); });

    m.def("k_irreducible", [](const std::string& s, int k) {
        return homog::k_irreducible(parse_structure(s), k);
    }, py::arg("structure"), py::arg("k"));

    // ------------------------------------------------------------- examples
    m.def("catalog", [](const std::string& name) { return dump_structure(homog::catalog_structure(name)); },
          py::arg("name"), "C1, C3, K4 or K4_minus.");
    m.def("build_h_n", [](int n) { return dump_structure(homog::build_H_n(n)); }, py::arg("n"));
    m.def("parity_hypergraph", [](const std::string& g) {
        return dump_structure(homog::build_parity_hypergraph(parse_structure(g)));
    }, py::arg("graph"));
    m.def("parity_approximation", [](int steps, std::uint64_t seed) {
        return dump_structure(homog::parity_approximation(steps, seed));
    }, py::arg("steps"), py::arg("seed"));
    m.def("random_tournament", [](int n, std::uint64_t seed) {
        return dump_structure(homog::random_tournament(n, seed));
    }, py::arg("n"), py::arg("seed"));
    m.def("tournament_reduct", [](const std::string& t) {
        return dump_structure(homog::tournament_reduct(parse_structure(t)));
    }, py::arg("tournament"));
    m.def("approx_n_equal", [](const std::string& t, const std::vector<int>& u, const std::vector<int>& v) {
        return homog::approx_n_equal(parse_structure(t), u, v);
    }, py::arg("tournament"), py::arg("u"), py::arg("v"));
    m.def("tournament_reduct_age", [] { return homog::age_to_json(homog::tournament_reduct_age()).dump(); });

    // ------------------------------------------------------------ age engine
    m.def("is_permitted", [](const std::string& age, const std::string& s) {
        return parse_age(age).is_permitted(parse_structure(s));
    }, py::arg("age"), py::arg("structure"));

    m.def("enumerate_constraints", [](const std::string& age, int max_size) {
        const auto result = homog::enumerate_constraints(parse_age(age), max_size);
        json out;
        out["completed_size"] = result.completed_size;
        out["truncated"] = result.truncated;
        json list = json::array();
        for (const auto& rec : result.constraints) list.push_back(homog::constraint_record_to_json(rec));
        out["constraints"] = std::move(list);
        return out.dump();
    }, py::arg("age"), py::arg("max_size"));

    m.def("minimize_forbidden", [](const std::string& age, const std::string& s,
                                   const std::vector<int>& protected_elements) {
        const auto rec = homog::minimize_forbidden(parse_age(age), parse_structure(s), protected_elements);
        return homog::constraint_record_to_json(rec).dump();
    }, py::arg("age"), py::arg("structure"), py::arg("protected_elements") = std::vector<int>{});

    m.def("check_amalgamation", [](const std::string& age, const std::string& kind, int max_union) {
        const homog::AmalgamKind k = kind == "free"     ? homog::AmalgamKind::free
                                     : kind == "disjoint" ? homog::AmalgamKind::disjoint
                                                          : homog::AmalgamKind::general;
        const auto rep = homog::check_amalgamation(parse_age(age), k, max_union);
        json out;
        out["verdict"] = rep.verdict == homog::AmalgamReport::Verdict::pass ? "pass"
                         : rep.verdict == homog::AmalgamReport::Verdict::counterexample
                             ? "counterexample"
                             : "truncated";
        out["verified_through"] = rep.verified_through;
        if (rep.witness) {
            out["a"] = homog::structure_to_json(rep.witness->a);
            out["b"] = homog::structure_to_json(rep.witness->b);
            out["amalgam"] = homog::structure_to_json(rep.witness->amalgam);
        }
        return out.dump();
    }, py::arg("age"), py::arg("kind"), py::arg("max_union"));

    m.def("classify_isolation", [](const std::string& age_text, const std::string& s) {
        const homog::Age age = parse_age(age_text);
        const auto rec = homog::make_constraint_record(age, parse_structure(s));
        const auto rep = homog::classify_isolation(rec, age);
        switch (rep.verdict) {
            case homog::IsolationVerdict::isolated: return std::string("isolated");
            case homog::IsolationVerdict::weakly_isolated: return std::string("weakly_isolated");
            default: return std::string("not_weakly_isolated");
        }
    }, py::arg("age"), py::arg("constraint"));

    // --------------------------------------------------------- generic builder
    m.def("grow_generic", [](const std::string& age, int steps, std::uint64_t seed, int bound) {
        const auto g = homog::grow_generic(parse_age(age), steps, seed, bound);
        json out;
        out["structure"] = homog::structure_to_json(g.structure);
        out["log"] = homog::growth_log_to_json(g);
        return out.dump();
    }, py::arg("age"), py::arg("steps"), py::arg("seed"), py::arg("demand_bound") = 3);

    m.def("replay_log", [](const std::string& log) {
        const auto g = homog::growth_log_from_json(json::parse(log));
        return dump_structure(homog::replay_log(g.age, g.log, true));
    }, py::arg("log"));

    m.def("extension_ratio", [](const std::string& log, int demand_size, int sample) {
        const auto g = homog::growth_log_from_json(json::parse(log));
        const auto rep = homog::check_extension_property(g, demand_size, sample);
        return py::make_tuple(rep.met, rep.total, rep.ratio());
    }, py::arg("log"), py::arg("demand_size"), py::arg("sample") = 0);

    // ------------------------------------------------------------ expansions
    m.def("build_m_p", [](const std::string& m_text, const std::vector<int>& params,
                          const std::vector<int>& witnesses) {
        const auto m_s = parse_structure(m_text);
        std::vector<homog::QfType> types;
        for (int w : witnesses) types.push_back(homog::point_type_over(m_s, params, w));
        const auto mp = homog::build_M_P(m_s, params, types);
        json out;
        out["structure"] = homog::structure_to_json(mp.structure);
        out["universe"] = mp.universe;
        out["minus"] = homog::structure_to_json(homog::reduct_M_P_minus(mp));
        return out.dump();
    }, py::arg("structure"), py::arg("params"), py::arg("type_witnesses"),
       "Expansion over the parameter list, with the reduct to the derived symbols under 'minus'.");

    m.def("search_definable_equivalence", [](const std::string& s_text, const std::vector<int>& params,
                                             int witness) {
        const auto s = parse_structure(s_text);
        const auto p = homog::point_type_over(s, params, witness);
        const auto rep = homog::search_definable_equivalence(s, params, p);
        json out;
        out["realization_size"] = rep.realization.size();
        out["candidates"] = json::array();
        for (const auto& c : rep.candidates) out["candidates"].push_back({{"classes", c.classes}});
        return out.dump();
    }, py::arg("structure"), py::arg("params"), py::arg("witness"));

    // ---------------------------------------------------------------- suites
    m.def("suite_names", [] { return homog::suite_names(); });
    m.def("run_suite", [](const std::string& name, std::uint64_t seed) {
        return homog::run_suite(name, seed).to_json().dump(2);
    }, py::arg("name"), py::arg("seed") = 1);
}
