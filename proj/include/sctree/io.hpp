#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sctree/theorem.hpp"
#include "sctree/verification.hpp"

namespace sctree {

// Field order is part of the wire contract, so everything serializes
// through ordered_json.
using Json = nlohmann::ordered_json;

// {"nodes": [tokens...], "edges": [[u,v]...]}; node order in a file is
// irrelevant, the loaded tree is canonical.
Json tree_to_json(const Tree& tree);
Tree tree_from_json(const Json& doc);

// {"alternatives": [...], "preferences": [[best..worst], ...]}
Json domain_to_json(const Domain& domain);
Domain domain_from_json(const Json& doc);

// {"entries": [ranking...]} or {"indices": [i...]} into a domain's
// preference list (0-based); the indices form needs the domain.
Json profile_to_json(const Profile& profile);
Profile profile_from_json(const Json& doc, const std::optional<Domain>& domain);

// {"type": "extreme", "leaf": "a"}
Json rule_to_json(const ExtremeRule& rule);
ExtremeRule rule_from_json(const Json& doc, const Tree& tree);

Json witness_to_json(const ManipulationWitness& w);
Json witness_to_json(const EfficiencyWitness& w);
Json witness_to_json(const UnanimityWitness& w);
Json witness_to_json(const AnonymityWitness& w);

// {"property":..., "verdict":..., "witness":..., "profiles_examined":N,
//  "work_units":N}
Json report_to_json(const CheckReport& report);

Json verdict_to_json(const TheoremVerdict& verdict);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& doc);

// Single canonical text form: two-space indent plus trailing newline.
std::string render(const Json& doc);

}  // namespace sctree
