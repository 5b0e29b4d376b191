#include "homog/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "homog/tournaments.hpp"

namespace homog {

json signature_to_json(const Signature& sig) {
    json arr = json::array();
    for (const auto& s : sig.symbols())
        arr.push_back({{"name", s.name}, {"arity", s.arity}, {"symmetric", s.symmetric}});
    return arr;
}

Signature signature_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("signature: expected an array");
    std::vector<SymbolDef> symbols;
    for (const auto& e : j) {
        SymbolDef d;
        d.name = e.at("name").get<std::string>();
        d.arity = e.at("arity").get<int>();
        d.symmetric = e.value("symmetric", false);
        symbols.push_back(std::move(d));
    }
    return Signature(std::move(symbols));
}

json structure_to_json(const FinStructure& s) {
    json j;
    j["signature"] = signature_to_json(s.signature());
    j["size"] = s.size();
    json rels = json::object();
    for (int sym = 0; sym < s.signature().size(); ++sym) {
        const int arity = s.signature().symbol(sym).arity;
        json list = json::array();
        for (TupleCode c : s.stored(sym)) list.push_back(decode_tuple(c, arity));
        rels[s.signature().symbol(sym).name] = std::move(list);
    }
    j["relations"] = std::move(rels);
    return j;
}

FinStructure structure_from_json(const json& j) {
    const Signature sig = signature_from_json(j.at("signature"));
    const int n = j.at("size").get<int>();
    FinStructure s(sig, n);
    if (j.contains("relations")) {
        for (const auto& [name, tuples] : j.at("relations").items()) {
            const auto sym = sig.index_of(name);
            if (!sym) throw std::invalid_argument("structure: unknown relation symbol '" + name + "'");
            for (const auto& t : tuples) {
                std::vector<int> tuple = t.get<std::vector<int>>();
                s.add(*sym, tuple);  // validates arity, range, distinctness
            }
        }
    }
    return s;
}

json age_to_json(const Age& age) {
    json j;
    j["signature"] = signature_to_json(age.signature());
    j["mode"] = age.mode() == MorphismMode::embedding ? "embedding" : "injective-homomorphism";
    json forb = json::array();
    for (const auto& f : age.forbidden()) forb.push_back(structure_to_json(f));
    j["forbidden"] = std::move(forb);
    if (const auto* oracle = age.oracle()) {
        json o;
        o["kind"] = oracle->kind();
        if (const auto* emb = dynamic_cast<const EmbedsIntoOracle*>(oracle))
            o["target"] = structure_to_json(emb->target());
        j["oracle"] = std::move(o);
    } else {
        j["oracle"] = nullptr;
    }
    return j;
}

Age age_from_json(const json& j) {
    const Signature sig = signature_from_json(j.at("signature"));
    const std::string mode_name = j.value("mode", "embedding");
    MorphismMode mode;
    if (mode_name == "embedding") mode = MorphismMode::embedding;
    else if (mode_name == "injective-homomorphism") mode = MorphismMode::injective_homomorphism;
    else throw std::invalid_argument("age: unknown mode '" + mode_name + "'");

    std::vector<FinStructure> forbidden;
    if (j.contains("forbidden"))
        for (const auto& f : j.at("forbidden")) forbidden.push_back(structure_from_json(f));

    if (j.contains("oracle") && !j.at("oracle").is_null()) {
        const std::string kind = j.at("oracle").at("kind").get<std::string>();
        if (kind == "tournament-reduct") {
            if (sig != reduct_signature())
                throw std::invalid_argument("age: tournament-reduct oracle needs the reduct vocabulary");
            return tournament_reduct_age();
        }
        if (kind == "embeds-into") {
            FinStructure target = structure_from_json(j.at("oracle").at("target"));
            if (target.signature() != sig)
                throw std::invalid_argument("age: oracle target signature mismatch");
            return Age(sig, mode, std::move(forbidden),
                       std::make_shared<EmbedsIntoOracle>(std::move(target)));
        }
        throw std::invalid_argument("age: unknown oracle kind '" + kind + "'");
    }
    return Age(sig, mode, std::move(forbidden));
}

json constraint_record_to_json(const ConstraintRecord& rec) {
    json j;
    j["structure"] = structure_to_json(rec.structure);
    json mins = json::array();
    for (const auto& w : rec.witnesses)
        mins.push_back({{"element", w.element}, {"deleted_permitted", w.deleted_permitted}});
    j["minimality"] = std::move(mins);
    return j;
}

json qf_type_to_json(const QfType& t) {
    json j;
    j["arity"] = t.arity;
    j["eq"] = t.eq_pattern;
    json atoms = json::array();
    for (const auto& [sym, code] : t.atoms) {
        // positions stored with the symbol's arity implied by the structure
        // they came from; serialize explicitly
        json entry = json::array();
        entry.push_back(sym);
        // decode with maximal width; trailing zero bytes mean absent slots
        std::vector<int> all = decode_tuple(code, 8);
        std::vector<int> positions;
        for (int v : all)
            if (v >= 0) positions.push_back(v);
        entry.push_back(positions);
        atoms.push_back(std::move(entry));
    }
    j["atoms"] = std::move(atoms);
    return j;
}

QfType qf_type_from_json(const json& j) {
    QfType t;
    t.arity = j.at("arity").get<int>();
    t.eq_pattern = j.at("eq").get<std::vector<int>>();
    for (const auto& entry : j.at("atoms")) {
        const int sym = entry.at(0).get<int>();
        const std::vector<int> positions = entry.at(1).get<std::vector<int>>();
        t.atoms.emplace_back(sym, encode_tuple(positions));
    }
    std::sort(t.atoms.begin(), t.atoms.end());
    return t;
}

json growth_log_to_json(const GenericApprox& g) {
    json j;
    j["seed"] = g.seed;
    j["demand_bound"] = g.demand_bound;
    j["age"] = age_to_json(g.age);
    json log = json::array();
    for (const auto& entry : g.log) {
        json e;
        e["base"] = entry.base;
        e["type"] = qf_type_to_json(entry.type);
        json row = json::array();
        for (const auto& [sym, tuple] : entry.row) {
            row.push_back(json::array({g.age.signature().symbol(sym).name, tuple}));
        }
        e["row"] = std::move(row);
        log.push_back(std::move(e));
    }
    j["log"] = std::move(log);
    return j;
}

GenericApprox growth_log_from_json(const json& j) {
    GenericApprox g;
    g.seed = j.at("seed").get<std::uint64_t>();
    g.demand_bound = j.value("demand_bound", 3);
    g.age = age_from_json(j.at("age"));
    for (const auto& e : j.at("log")) {
        GrowthLogEntry entry;
        entry.base = e.at("base").get<std::vector<int>>();
        entry.type = qf_type_from_json(e.at("type"));
        for (const auto& r : e.at("row")) {
            const std::string name = r.at(0).get<std::string>();
            const auto sym = g.age.signature().index_of(name);
            if (!sym) throw std::invalid_argument("growth log: unknown symbol '" + name + "'");
            entry.row.emplace_back(*sym, r.at(1).get<std::vector<int>>());
        }
        g.log.push_back(std::move(entry));
    }
    g.structure = replay_log(g.age, g.log);
    return g;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace homog
