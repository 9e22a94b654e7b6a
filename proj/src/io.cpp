#include "sctree/io.hpp"

#include <algorithm>
#include <fstream>

namespace sctree {

namespace {

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    fail(ErrorKind::ParseError, std::string("missing field '") + name + "'");
  }
  return doc.at(name);
}

std::vector<Alternative> token_list(const Json& value, const char* context) {
  if (!value.is_array()) fail(ErrorKind::ParseError, std::string(context) + " must be an array");
  std::vector<Alternative> out;
  for (const auto& item : value) {
    if (!item.is_string()) fail(ErrorKind::ParseError, std::string(context) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Json tree_to_json(const Tree& tree) {
  Json doc;
  doc["nodes"] = tree.nodes();
  Json edges = Json::array();
  for (const auto& [u, v] : tree.edges()) edges.push_back(Json::array({u, v}));
  doc["edges"] = edges;
  return doc;
}

Tree tree_from_json(const Json& doc) {
  auto nodes = token_list(field(doc, "nodes"), "nodes");
  const Json& edges_doc = field(doc, "edges");
  if (!edges_doc.is_array()) fail(ErrorKind::ParseError, "edges must be an array");
  std::vector<std::pair<Alternative, Alternative>> edges;
  for (const auto& e : edges_doc) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      fail(ErrorKind::ParseError, "each edge must be a [u,v] pair of tokens");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Tree::build(nodes, edges);
}

Json domain_to_json(const Domain& domain) {
  Json doc;
  doc["alternatives"] = domain.alternatives();
  Json prefs = Json::array();
  for (const auto& p : domain.preferences()) prefs.push_back(p.ranking());
  doc["preferences"] = prefs;
  return doc;
}

Domain domain_from_json(const Json& doc) {
  auto alternatives = token_list(field(doc, "alternatives"), "alternatives");
  const Json& prefs_doc = field(doc, "preferences");
  if (!prefs_doc.is_array()) fail(ErrorKind::ParseError, "preferences must be an array");
  std::vector<Preference> prefs;
  for (const auto& p : prefs_doc) {
    prefs.push_back(Preference::make(token_list(p, "preference ranking"), alternatives));
  }
  return Domain::make(std::move(alternatives), std::move(prefs));
}

Json profile_to_json(const Profile& profile) {
  Json doc;
  Json entries = Json::array();
  for (const auto& p : profile.entries()) entries.push_back(p.ranking());
  doc["entries"] = entries;
  return doc;
}

Profile profile_from_json(const Json& doc, const std::optional<Domain>& domain) {
  if (!doc.is_object()) fail(ErrorKind::ParseError, "profile document must be an object");
  if (doc.contains("entries")) {
    const Json& entries_doc = doc.at("entries");
    if (!entries_doc.is_array() || entries_doc.empty()) {
      fail(ErrorKind::ParseError, "entries must be a nonempty array of rankings");
    }
    std::vector<Alternative> alphabet = token_list(entries_doc[0], "ranking");
    std::sort(alphabet.begin(), alphabet.end());
    std::vector<Preference> entries;
    for (const auto& r : entries_doc) {
      entries.push_back(Preference::make(token_list(r, "ranking"), alphabet));
    }
    return Profile::make(std::move(entries));
  }
  if (doc.contains("indices")) {
    if (!domain) fail(ErrorKind::ParseError, "profile uses indices but no domain was given");
    const Json& indices_doc = doc.at("indices");
    if (!indices_doc.is_array() || indices_doc.empty()) {
      fail(ErrorKind::ParseError, "indices must be a nonempty array");
    }
    std::vector<Preference> entries;
    for (const auto& idx : indices_doc) {
      if (!idx.is_number_unsigned() || idx.get<std::size_t>() >= domain->size()) {
        fail(ErrorKind::ParseError,
             "preference index " + idx.dump() + " out of range for domain of size " +
                 std::to_string(domain->size()));
      }
      entries.push_back(domain->at(idx.get<std::size_t>()));
    }
    return Profile::make(std::move(entries));
  }
  fail(ErrorKind::ParseError, "profile document needs 'entries' or 'indices'");
}

Json rule_to_json(const ExtremeRule& rule) {
  Json doc;
  doc["type"] = "extreme";
  doc["leaf"] = rule.leaf();
  return doc;
}

ExtremeRule rule_from_json(const Json& doc, const Tree& tree) {
  const Json& type = field(doc, "type");
  if (!type.is_string() || type.get<std::string>() != "extreme") {
    fail(ErrorKind::ParseError, "unknown rule type " + type.dump());
  }
  const Json& leaf = field(doc, "leaf");
  if (!leaf.is_string()) fail(ErrorKind::ParseError, "rule leaf must be a token");
  return ExtremeRule::make(tree, leaf.get<std::string>());
}

Json witness_to_json(const ManipulationWitness& w) {
  Json doc;
  doc["kind"] = "manipulation";
  doc["agent"] = w.agent;
  doc["truthful_profile"] = profile_to_json(w.truthful_profile)["entries"];
  doc["misreport"] = w.misreport.ranking();
  doc["truthful_outcome"] = w.truthful_outcome;
  doc["deviating_outcome"] = w.deviating_outcome;
  return doc;
}

Json witness_to_json(const EfficiencyWitness& w) {
  Json doc;
  doc["kind"] = "efficiency";
  doc["profile"] = profile_to_json(w.profile)["entries"];
  doc["dominating"] = w.dominating;
  doc["outcome"] = w.outcome;
  return doc;
}

Json witness_to_json(const UnanimityWitness& w) {
  Json doc;
  doc["kind"] = "unanimity";
  doc["profile"] = profile_to_json(w.profile)["entries"];
  doc["unanimous_top"] = w.unanimous_top;
  doc["outcome"] = w.outcome;
  return doc;
}

Json witness_to_json(const AnonymityWitness& w) {
  Json doc;
  doc["kind"] = "anonymity";
  doc["profile"] = profile_to_json(w.profile)["entries"];
  doc["permuted_profile"] = profile_to_json(w.permuted_profile)["entries"];
  doc["outcome"] = w.outcome;
  doc["permuted_outcome"] = w.permuted_outcome;
  return doc;
}

Json report_to_json(const CheckReport& report) {
  Json doc;
  doc["property"] = report.property;
  doc["verdict"] = report.holds ? "holds" : "fails";
  doc["witness"] = std::visit(
      [](const auto& w) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(w)>, std::monostate>) {
          return nullptr;
        } else {
          return witness_to_json(w);
        }
      },
      report.witness);
  doc["profiles_examined"] = report.profiles_examined;
  doc["work_units"] = report.work_units;
  return doc;
}

Json verdict_to_json(const TheoremVerdict& verdict) {
  Json doc;
  doc["tree"] = verdict.tree_id;
  doc["domain"] = verdict.domain_id;
  doc["n"] = verdict.n;
  doc["direction"] = verdict.direction;
  doc["single_peaked"] = verdict.single_peaked;
  doc["all_extreme_sp"] = verdict.all_extreme_sp;
  doc["consistent"] = verdict.consistent();
  Json checks = Json::array();
  for (const auto& check : verdict.rule_checks) {
    Json entry;
    entry["leaf"] = check.leaf;
    entry["strategy_proof"] = check.strategy_proof;
    entry["witness"] = check.witness ? witness_to_json(*check.witness) : Json(nullptr);
    checks.push_back(entry);
  }
  doc["rule_checks"] = checks;
  return doc;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::ParseError, "cannot open '" + path + "' for writing");
  out << render(doc);
}

std::string render(const Json& doc) {
  return doc.dump(2) + "\n";
}

}  // namespace sctree
