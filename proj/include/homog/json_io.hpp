#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "homog/age.hpp"
#include "homog/constraints.hpp"
#include "homog/generic.hpp"
#include "homog/structure.hpp"

namespace homog {

using json = nlohmann::ordered_json;

// Structure format: {"signature":[{"name","arity","symmetric"}...],
// "size": n, "relations": {"R": [[i,j,k], ...]}}.  Symmetric symbols list one
// representative per orbit; the loader accepts any orientation, expands and
// validates.  Tuples with repeated entries are rejected.
json structure_to_json(const FinStructure& s);
FinStructure structure_from_json(const json& j);

json signature_to_json(const Signature& sig);
Signature signature_from_json(const json& j);

// Age format: {"signature": [...], "mode": "embedding" |
// "injective-homomorphism", "forbidden": [structure...],
// "oracle": null | {"kind": "tournament-reduct"} |
//           {"kind": "embeds-into", "target": structure}}.
json age_to_json(const Age& age);
Age age_from_json(const json& j);

json constraint_record_to_json(const ConstraintRecord& rec);

json qf_type_to_json(const QfType& t);
QfType qf_type_from_json(const json& j);

// Growth log sidecar: {"seed": ..., "demand_bound": ..., "age": ...,
// "log": [{"base": [...], "type": ..., "row": [["R", [i,j,k]], ...]}...]}.
json growth_log_to_json(const GenericApprox& g);
GenericApprox growth_log_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace homog
