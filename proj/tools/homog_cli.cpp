#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

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

namespace {

using homog::json;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_truncated = 2;
constexpr int exit_usage = 64;

struct GlobalOptions {
    std::uint64_t seed = 1;
    std::uint64_t budget_nodes = homog::Budget::default_node_limit;
    double budget_secs = 0.0;
    std::string format = "text";
};

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    if (const char* v = std::getenv(name)) return std::strtoull(v, nullptr, 10);
    return fallback;
}

void emit(const GlobalOptions& opts, const json& body, const std::string& text) {
    if (opts.format == "json") std::cout << body.dump(2) << "\n";
    else std::cout << text;
}

void write_or_print(const GlobalOptions& opts, const std::optional<std::string>& out_path,
                    const json& body) {
    if (out_path && !out_path->empty()) homog::save_json_file(*out_path, body);
    else std::cout << body.dump(2) << "\n";
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite homogeneous-structure toolkit: ages, constraints, amalgamation, "
                 "generic approximations and verification suites"};
    app.require_subcommand(1);

    GlobalOptions opts;
    opts.seed = env_u64("HOMOG_SEED", opts.seed);
    opts.budget_nodes = env_u64("HOMOG_BUDGET_NODES", opts.budget_nodes);
    if (const char* v = std::getenv("HOMOG_BUDGET_SECS")) opts.budget_secs = std::atof(v);
    if (const char* v = std::getenv("HOMOG_FORMAT")) opts.format = v;

    app.add_option("--seed", opts.seed, "seed for seeded commands");
    app.add_option("--budget-nodes", opts.budget_nodes, "search-node budget (0 = unlimited)");
    app.add_option("--budget-secs", opts.budget_secs, "wall-clock budget in seconds (0 = unlimited)");
    app.add_option("--format", opts.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // ---------------------------------------------------------- structure
    auto* structure = app.add_subcommand("structure", "inspect or canonicalize a structure file");
    std::string structure_in;
    bool do_canon = false;
    structure->add_option("--in", structure_in, "structure JSON file")->required();
    structure->add_flag("--canon", do_canon, "print the canonical form and labeling");

    // ---------------------------------------------------------------- age
    auto* age_cmd = app.add_subcommand("age", "age queries: permittedness, constraints, amalgamation");
    std::string age_file;
    age_cmd->add_option("--age", age_file, "age JSON file")->required();

    auto* age_check = age_cmd->add_subcommand("check", "is a structure permitted?");
    std::string age_check_in;
    age_check->add_option("--in", age_check_in, "structure JSON file")->required();

    auto* age_constraints = age_cmd->add_subcommand("constraints", "enumerate constraints up to a size");
    int constraints_max = 4;
    std::string constraints_out;
    age_constraints->add_option("--max-size", constraints_max, "largest universe size")->required();
    age_constraints->add_option("--out", constraints_out, "write the report here");

    auto* age_amalg = age_cmd->add_subcommand("amalgamation", "check an amalgamation property");
    std::string amalg_kind = "free";
    int amalg_max = 4;
    age_amalg->add_option("--kind", amalg_kind, "free | disjoint | general")
        ->check(CLI::IsMember({"free", "disjoint", "general"}));
    age_amalg->add_option("--max-size", amalg_max, "largest union size")->required();

    auto* age_random = age_cmd->add_subcommand("random", "bounded-constraint test from enumeration");
    int random_max = 4;
    age_random->add_option("--max-size", random_max, "constraint enumeration bound")->required();

    auto* age_facts = age_cmd->add_subcommand("facts", "irreducibility and pairwise-morphism hypotheses");
    std::string facts_which = "henson";
    age_facts->add_option("--which", facts_which, "henson | conant")
        ->check(CLI::IsMember({"henson", "conant"}));

    auto* age_minimize = age_cmd->add_subcommand("minimize", "greedy minimization of a forbidden structure");
    std::string minimize_in, minimize_protected;
    age_minimize->add_option("--in", minimize_in, "forbidden structure JSON file")->required();
    age_minimize->add_option("--protected", minimize_protected, "comma-separated protected elements");

    // ------------------------------------------------------------- generic
    auto* generic = app.add_subcommand("generic", "grow and probe generic approximations");

    auto* gen_grow = generic->add_subcommand("grow", "grow a seeded approximation");
    std::string grow_age, grow_out, grow_log;
    int grow_steps = 30, grow_bound = 3;
    gen_grow->add_option("--age", grow_age, "age JSON file")->required();
    gen_grow->add_option("--steps", grow_steps, "vertices to grow")->required();
    gen_grow->add_option("--demand-bound", grow_bound, "largest demand subset size");
    gen_grow->add_option("--out", grow_out, "structure output file");
    gen_grow->add_option("--log", grow_log, "growth log sidecar output file");

    auto* gen_replay = generic->add_subcommand("replay", "replay a growth log and verify it");
    std::string replay_log_file, replay_out;
    gen_replay->add_option("--log", replay_log_file, "growth log sidecar")->required();
    gen_replay->add_option("--out", replay_out, "structure output file");

    auto* gen_ext = generic->add_subcommand("extension-check", "extension-demand satisfaction ratio");
    std::string ext_log;
    int ext_demand = 2, ext_sample = 0;
    gen_ext->add_option("--log", ext_log, "growth log sidecar")->required();
    gen_ext->add_option("--demand-size", ext_demand, "demand subset size")->required();
    gen_ext->add_option("--sample", ext_sample, "samples (0 = exhaustive)");

    auto* gen_rel = generic->add_subcommand("extension-e",
                                            "extension check relative to an equivalence partition");
    std::string rel_in, rel_classes, rel_demands;
    gen_rel->add_option("--in", rel_in, "binary structure JSON file")->required();
    gen_rel->add_option("--classes", rel_classes, "partition, e.g. 0,1|2,3")->required();
    gen_rel->add_option("--demands", rel_demands, "demands a:b comma-separated")->required();

    // ------------------------------------------------------------ examples
    auto* examples = app.add_subcommand("examples", "build the example catalog");
    auto* ex_build = examples->add_subcommand("build", "emit a named example structure");
    std::string ex_what, ex_out;
    int ex_n = 3, ex_steps = 40;
    ex_build->add_option("what", ex_what, "h_n | parity | tournament-reduct | tetrahedron-free")
        ->required()
        ->check(CLI::IsMember({"h_n", "parity", "tournament-reduct", "tetrahedron-free"}));
    ex_build->add_option("--n", ex_n, "family index / tournament size");
    ex_build->add_option("--steps", ex_steps, "growth steps for seeded examples");
    ex_build->add_option("--out", ex_out, "output file");

    // ----------------------------------------------------------- isolation
    auto* isolation = app.add_subcommand("isolation", "classify a constraint's neighbour isolation");
    std::string iso_constraint, iso_age;
    isolation->add_option("--constraint", iso_constraint, "constraint structure JSON file")->required();
    isolation->add_option("--age", iso_age, "age JSON file")->required();

    // --------------------------------------------------------------- eqrel
    auto* eqrel = app.add_subcommand("eqrel", "search definable equivalence relations");
    std::string eq_approx, eq_params;
    int eq_witness = -1;
    eqrel->add_option("--approx", eq_approx, "structure JSON file")->required();
    eqrel->add_option("--params", eq_params, "comma-separated parameter elements (may be empty)");
    eqrel->add_option("--witness", eq_witness, "element whose type over the parameters is searched");

    // -------------------------------------------------------------- verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite = "all";
    verify->add_option("suite", verify_suite, "suite name or 'all'");
    bool list_suites = false;
    verify->add_flag("--list", list_suites, "list suite names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return exit_usage;
    }

    homog::Budget budget(opts.budget_nodes, opts.budget_secs);
    try {
        if (structure->parsed()) {
            const auto s = homog::structure_from_json(homog::load_json_file(structure_in));
            json body;
            body["size"] = s.size();
            body["symmetric"] = homog::is_symmetric(s);
            json counts = json::object();
            for (int sym = 0; sym < s.signature().size(); ++sym)
                counts[s.signature().symbol(sym).name] = s.stored_count(sym);
            body["stored_tuples"] = counts;
            const auto part = homog::refine_partition(s);
            body["refinement_classes"] = part.classes;
            if (do_canon) {
                const auto canon = homog::canonicalize(s);
                body["canonical_form"] = canon.form.hex();
                body["canonical_labeling"] = canon.labeling;
            }
            std::string text = "size " + std::to_string(s.size()) + ", " +
                               std::to_string(part.classes.size()) + " refinement classes\n";
            if (do_canon) text += "canonical form " + homog::canonical_form(s).hex() + "\n";
            emit(opts, body, text);
            return exit_ok;
        }

        if (age_cmd->parsed()) {
            const homog::Age age = homog::age_from_json(homog::load_json_file(age_file));
            if (age_check->parsed()) {
                const auto s = homog::structure_from_json(homog::load_json_file(age_check_in));
                const bool permitted = age.is_permitted(s, &budget);
                emit(opts, json{{"permitted", permitted}},
                     permitted ? "permitted\n" : "forbidden\n");
                return exit_ok;
            }
            if (age_constraints->parsed()) {
                const auto result = homog::enumerate_constraints(age, constraints_max, &budget);
                json body;
                body["completed_size"] = result.completed_size;
                body["truncated"] = result.truncated;
                json list = json::array();
                for (const auto& rec : result.constraints)
                    list.push_back(homog::constraint_record_to_json(rec));
                body["constraints"] = std::move(list);
                write_or_print(opts, constraints_out.empty() ? std::nullopt
                                                             : std::make_optional(constraints_out),
                               body);
                return result.truncated ? exit_truncated : exit_ok;
            }
            if (age_amalg->parsed()) {
                const homog::AmalgamKind kind = amalg_kind == "free"     ? homog::AmalgamKind::free
                                                : amalg_kind == "disjoint" ? homog::AmalgamKind::disjoint
                                                                           : homog::AmalgamKind::general;
                const auto rep = homog::check_amalgamation(age, kind, amalg_max, &budget);
                json body;
                body["kind"] = amalg_kind;
                body["verified_through"] = rep.verified_through;
                if (rep.verdict == homog::AmalgamReport::Verdict::pass) body["verdict"] = "pass";
                else if (rep.verdict == homog::AmalgamReport::Verdict::truncated) body["verdict"] = "truncated";
                else {
                    body["verdict"] = "counterexample";
                    body["a"] = homog::structure_to_json(rep.witness->a);
                    body["b"] = homog::structure_to_json(rep.witness->b);
                    body["overlap"] = homog::structure_to_json(rep.witness->overlap);
                    body["amalgam"] = homog::structure_to_json(rep.witness->amalgam);
                }
                emit(opts, body, body.dump(2) + "\n");
                return rep.verdict == homog::AmalgamReport::Verdict::truncated ? exit_truncated : exit_ok;
            }
            if (age_random->parsed()) {
                const auto result = homog::enumerate_constraints(age, random_max, &budget);
                const auto rep = homog::is_random_age(result.constraints, age.signature());
                json body;
                body["random"] = rep.random;
                body["mixed_arity_checked_levelwise"] = rep.mixed_arity;
                json levels = json::array();
                for (const auto& lvl : rep.levels)
                    levels.push_back({{"k", lvl.k},
                                      {"constraints", lvl.constraint_count},
                                      {"largest", lvl.largest},
                                      {"ok", lvl.ok}});
                body["levels"] = std::move(levels);
                body["enumeration_truncated"] = result.truncated;
                emit(opts, body, body.dump(2) + "\n");
                return result.truncated ? exit_truncated : exit_ok;
            }
            if (age_facts->parsed()) {
                const auto which = facts_which == "henson" ? homog::FactHypotheses::henson
                                                           : homog::FactHypotheses::conant;
                const auto rep = homog::check_fact_hypotheses(age.forbidden(), which, &budget);
                json body;
                body["pass"] = rep.pass;
                body["pairwise_embedding_free"] = rep.variant_pass;
                json viols = json::array();
                for (const auto& v : rep.violations)
                    viols.push_back({{"kind", v.kind}, {"a", v.member_a}, {"b", v.member_b},
                                     {"witness", v.witness}});
                body["violations"] = std::move(viols);
                emit(opts, body, body.dump(2) + "\n");
                return rep.pass ? exit_ok : exit_check_failed;
            }
            if (age_minimize->parsed()) {
                const auto s = homog::structure_from_json(homog::load_json_file(minimize_in));
                const auto rec = homog::minimize_forbidden(
                    age, s, parse_int_list(minimize_protected), &budget);
                write_or_print(opts, std::nullopt, homog::constraint_record_to_json(rec));
                return exit_ok;
            }
            std::cerr << "age: missing subcommand\n";
            return exit_usage;
        }

        if (generic->parsed()) {
            if (gen_grow->parsed()) {
                const homog::Age age = homog::age_from_json(homog::load_json_file(grow_age));
                const auto g = homog::grow_generic(age, grow_steps, opts.seed, grow_bound, &budget);
                const json s_json = homog::structure_to_json(g.structure);
                if (!grow_out.empty()) homog::save_json_file(grow_out, s_json);
                if (!grow_log.empty()) homog::save_json_file(grow_log, homog::growth_log_to_json(g));
                if (grow_out.empty()) std::cout << s_json.dump(2) << "\n";
                return exit_ok;
            }
            if (gen_replay->parsed()) {
                const auto g = homog::growth_log_from_json(homog::load_json_file(replay_log_file));
                const auto replayed = homog::replay_log(g.age, g.log, true, &budget);
                const json body = homog::structure_to_json(replayed);
                if (!replay_out.empty()) homog::save_json_file(replay_out, body);
                else std::cout << body.dump(2) << "\n";
                return exit_ok;
            }
            if (gen_ext->parsed()) {
                const auto g = homog::growth_log_from_json(homog::load_json_file(ext_log));
                const auto rep = homog::check_extension_property(g, ext_demand, ext_sample, &budget);
                json body{{"demand_size", ext_demand},
                          {"met", rep.met},
                          {"total", rep.total},
                          {"ratio", rep.ratio()}};
                emit(opts, body, body.dump(2) + "\n");
                return exit_ok;
            }
            if (gen_rel->parsed()) {
                const auto s = homog::structure_from_json(homog::load_json_file(rel_in));
                std::vector<std::vector<int>> classes;
                std::string cur;
                for (char c : rel_classes + "|") {
                    if (c == '|') {
                        if (!cur.empty()) classes.push_back(parse_int_list(cur));
                        cur.clear();
                    } else cur.push_back(c);
                }
                std::vector<std::pair<int, int>> demands;
                cur.clear();
                for (char c : rel_demands + ",") {
                    if (c == ',') {
                        if (!cur.empty()) {
                            const auto colon = cur.find(':');
                            demands.emplace_back(std::stoi(cur.substr(0, colon)),
                                                 std::stoi(cur.substr(colon + 1)));
                        }
                        cur.clear();
                    } else cur.push_back(c);
                }
                const auto result = homog::check_extension_relative_to_E(s, classes, demands);
                json body{{"pass", result.pass}};
                if (result.witness) body["witness"] = *result.witness;
                emit(opts, body, result.pass ? "pass\n" : "unmet\n");
                return result.pass ? exit_ok : exit_check_failed;
            }
            std::cerr << "generic: missing subcommand\n";
            return exit_usage;
        }

        if (examples->parsed()) {
            if (!ex_build->parsed()) {
                std::cerr << "examples: missing subcommand\n";
                return exit_usage;
            }
            json body;
            if (ex_what == "h_n") body = homog::structure_to_json(homog::build_H_n(ex_n));
            else if (ex_what == "parity")
                body = homog::structure_to_json(homog::parity_approximation(ex_steps, opts.seed));
            else if (ex_what == "tournament-reduct")
                body = homog::structure_to_json(
                    homog::tournament_reduct(homog::random_tournament(std::max(ex_n, 3), opts.seed)));
            else
                body = homog::structure_to_json(
                    homog::grow_generic(homog::forbidden_age(homog::ternary_signature(),
                                                             {homog::catalog_structure("K4")}),
                                        ex_steps, opts.seed, 3, &budget)
                        .structure);
            write_or_print(opts, ex_out.empty() ? std::nullopt : std::make_optional(ex_out), body);
            return exit_ok;
        }

        if (isolation->parsed()) {
            const homog::Age age = homog::age_from_json(homog::load_json_file(iso_age));
            const auto s = homog::structure_from_json(homog::load_json_file(iso_constraint));
            const auto rec = homog::make_constraint_record(age, s, &budget);
            const auto rep = homog::classify_isolation(rec, age, &budget);
            json body;
            body["verdict"] = rep.verdict == homog::IsolationVerdict::isolated ? "isolated"
                             : rep.verdict == homog::IsolationVerdict::weakly_isolated
                                 ? "weakly_isolated"
                                 : "not_weakly_isolated";
            if (rep.witness_triple)
                body["witness_triple"] = {(*rep.witness_triple)[0], (*rep.witness_triple)[1],
                                          (*rep.witness_triple)[2]};
            emit(opts, body, body["verdict"].get<std::string>() + "\n");
            return exit_ok;
        }

        if (eqrel->parsed()) {
            const auto s = homog::structure_from_json(homog::load_json_file(eq_approx));
            const std::vector<int> params = parse_int_list(eq_params);
            int witness = eq_witness;
            if (witness < 0) {
                for (int x = 0; x < s.size(); ++x)
                    if (std::find(params.begin(), params.end(), x) == params.end()) { witness = x; break; }
            }
            const homog::QfType p = homog::point_type_over(s, params, witness);
            const auto rep = homog::search_definable_equivalence(s, params, p, &budget);
            json body;
            body["finite_evidence"] = true;
            body["realization_size"] = rep.realization.size();
            body["realized_pair_types"] = rep.realized_pair_types.size();
            json cands = json::array();
            for (const auto& c : rep.candidates) {
                json e;
                e["type_count"] = c.types.size();
                e["classes"] = c.classes;
                cands.push_back(std::move(e));
            }
            body["candidates"] = std::move(cands);
            emit(opts, body, body.dump(2) + "\n");
            return exit_ok;
        }

        if (verify->parsed()) {
            if (list_suites) {
                for (const auto& n : homog::suite_names()) std::cout << n << "\n";
                return exit_ok;
            }
            std::vector<std::string> to_run;
            if (verify_suite == "all") to_run = homog::suite_names();
            else to_run.push_back(verify_suite);
            int exit_code = exit_ok;
            for (const auto& name : to_run) {
                const auto rep = homog::run_suite(name, opts.seed, &budget);
                if (opts.format == "json") std::cout << rep.to_json().dump(2) << "\n";
                else std::cout << rep.to_text();
                exit_code = std::max(exit_code, rep.exit_code());
            }
            return exit_code;
        }
    } catch (const homog::budget_exceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_truncated;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
    return exit_usage;
}
