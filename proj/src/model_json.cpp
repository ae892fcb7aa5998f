#include "infosel/model_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace infosel {

using json = nlohmann::ordered_json;

namespace {

std::uint64_t require_index(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw ModelError(what + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

std::vector<VarId> id_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ModelError(what + " must be an array of ids");
  std::vector<VarId> out;
  for (const auto& e : j) out.push_back(static_cast<VarId>(require_index(e, what + " entry")));
  return out;
}

}  // namespace

ModelFile parse_model(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ModelError("model must be a JSON object");
  for (const char* field : {"variables", "cpts"})
    if (!root.contains(field)) throw ModelError(std::string("missing field '") + field + "'");

  std::vector<Variable> variables;
  if (!root["variables"].is_array()) throw ModelError("'variables' must be an array");
  for (const auto& v : root["variables"]) {
    if (!v.is_object() || !v.contains("name") || !v.contains("cardinality"))
      throw ModelError("each variable needs 'name' and 'cardinality'");
    if (!v["name"].is_string()) throw ModelError("variable name must be a string");
    const auto card = require_index(v["cardinality"], "cardinality");
    if (card < 1 || card > UINT32_MAX) throw ModelError("cardinality must be >= 1");
    variables.push_back({v["name"].get<std::string>(), static_cast<std::uint32_t>(card)});
  }

  std::vector<Cpt> cpts;
  if (!root["cpts"].is_array()) throw ModelError("'cpts' must be an array");
  for (const auto& c : root["cpts"]) {
    if (!c.is_object() || !c.contains("child") || !c.contains("table"))
      throw ModelError("each cpt needs 'child' and 'table'");
    Cpt cpt;
    cpt.child = static_cast<VarId>(require_index(c["child"], "cpt child"));
    if (c.contains("parents")) cpt.parents = id_list(c["parents"], "cpt parents");
    if (!c["table"].is_array()) throw ModelError("cpt table must be an array of rows");
    std::size_t width = 0;
    bool first = true;
    for (const auto& row : c["table"]) {
      if (!row.is_array()) throw ModelError("cpt table rows must be arrays");
      if (!first && row.size() != width)
        throw ModelError("cpt for " + std::to_string(cpt.child) + " has ragged rows");
      width = row.size();
      first = false;
      for (const auto& p : row) {
        if (!p.is_number()) throw ModelError("cpt entries must be numbers");
        cpt.table.push_back(p.get<double>());
      }
    }
    cpts.push_back(std::move(cpt));
  }

  std::vector<VarId> observables, targets;
  if (root.contains("observables")) observables = id_list(root["observables"], "observables");
  if (root.contains("targets")) targets = id_list(root["targets"], "targets");

  ModelFile model;
  model.network = DiscreteNetwork(std::move(variables), std::move(cpts), std::move(observables),
                                  std::move(targets));
  require_valid(model.network);

  model.costs.assign(model.network.size(), 1);
  if (root.contains("costs")) {
    if (!root["costs"].is_object()) throw ModelError("'costs' must be an object");
    for (const auto& [key, value] : root["costs"].items()) {
      std::size_t pos = 0;
      unsigned long id = 0;
      try {
        id = std::stoul(key, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != key.size() || key.empty()) throw ModelError("cost key '" + key + "' is not an id");
      if (id >= model.network.size()) throw ModelError("cost key '" + key + "' out of range");
      if (!value.is_number_integer())
        throw ModelError("cost of variable " + key + " must be an integer");
      const auto cost = value.get<std::int64_t>();
      if (cost < 1) throw ModelError("cost of variable " + key + " must be >= 1");
      model.costs[id] = cost;
    }
  }
  if (root.contains("budget")) {
    if (!root["budget"].is_number_integer()) throw ModelError("'budget' must be an integer");
    const auto budget = root["budget"].get<std::int64_t>();
    if (budget < 0) throw ModelError("'budget' must be non-negative");
    model.budget = budget;
  }
  return model;
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot read model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string serialize_model(const ModelFile& model) {
  const DiscreteNetwork& net = model.network;
  json root = json::object();
  json vars = json::array();
  for (const auto& v : net.variables())
    vars.push_back(json{{"name", v.name}, {"cardinality", v.cardinality}});
  root["variables"] = std::move(vars);

  json cpts = json::array();
  for (const auto& c : net.cpts()) {
    json table = json::array();
    const std::size_t cols = net.cardinality(c.child);
    for (std::size_t r = 0; cols && r < c.table.size() / cols; ++r) {
      json row = json::array();
      for (std::size_t k = 0; k < cols; ++k) row.push_back(c.table[r * cols + k]);
      table.push_back(std::move(row));
    }
    cpts.push_back(json{{"child", c.child}, {"parents", c.parents}, {"table", std::move(table)}});
  }
  root["cpts"] = std::move(cpts);
  root["observables"] = net.observables();
  root["targets"] = net.targets();

  json costs = json::object();
  for (std::size_t i = 0; i < model.costs.size(); ++i) costs[std::to_string(i)] = model.costs[i];
  root["costs"] = std::move(costs);
  if (model.budget) root["budget"] = *model.budget;
  return root.dump(2) + "\n";
}

std::string model_digest(const ModelFile& model) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_model(model)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace infosel
