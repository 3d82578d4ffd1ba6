#include "group/datum.hpp"

#include <json.hpp>

namespace a2ck::group {

using nlohmann::json;

namespace {

// The q=2 presentation on three order-3 generators where any two generate a
// Frobenius group of order 21. Panel (i,i+1) is carried by <s_i>; the cyclic
// symmetry of the presentation makes the assignment a convention.
const std::string kPaperQ2 = R"({
  "name": "paper-q2",
  "q": 2,
  "generators": ["s0", "s1", "s2"],
  "relators": [
    "s0 s0 s0", "s1 s1 s1", "s2 s2 s2",
    "s1 s0 s1 s0 s1' s0'",
    "s2 s1 s2 s1 s2' s1'",
    "s0 s2 s0 s2 s0' s2'"
  ],
  "panels": [
    {"type_pair": [0, 1], "generators": ["s0"]},
    {"type_pair": [1, 2], "generators": ["s1"]},
    {"type_pair": [2, 0], "generators": ["s2"]}
  ]
})";

GroupDatum from_json(const json& j) {
  GroupDatum d;
  if (!j.is_object()) throw Error(Errc::parse, "group datum: expected a JSON object");
  d.name = j.value("name", std::string{});
  if (!j.contains("q") || !j["q"].is_number_integer() || j["q"].get<int>() < 2)
    throw Error(Errc::invalid_argument, "group datum: q must be an integer >= 2");
  d.q = j["q"].get<int>();
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    throw Error(Errc::invalid_argument, "group datum: missing generators");
  d.symbols = SymbolTable(j["generators"].get<std::vector<std::string>>());
  if (!j.contains("relators") || !j["relators"].is_array())
    throw Error(Errc::invalid_argument, "group datum: missing relators");
  for (const auto& r : j["relators"]) {
    Word w = d.symbols.parse_word(r.get<std::string>());
    if (w.empty()) throw Error(Errc::invalid_argument, "group datum: empty relator");
    d.relators.push_back(std::move(w));
  }
  if (!j.contains("panels") || !j["panels"].is_array() || j["panels"].size() != 3)
    throw Error(Errc::invalid_argument, "group datum: exactly three panels required");
  std::array<bool, 3> seen{false, false, false};
  for (const auto& p : j["panels"]) {
    auto tp = p.at("type_pair").get<std::vector<int>>();
    if (tp.size() != 2) throw Error(Errc::invalid_argument, "panel type_pair must have two types");
    int idx = pair_index(tp[0], tp[1]);
    if (seen[idx]) throw Error(Errc::invalid_argument, "duplicate panel type pair");
    seen[idx] = true;
    PanelDecl decl;
    decl.type_pair = idx;
    for (const auto& g : p.at("generators")) {
      Word w = d.symbols.parse_word(g.get<std::string>());
      if (w.size() != 1)
        throw Error(Errc::invalid_argument, "panel generators must be single symbols");
      decl.generators.push_back(static_cast<Symbol>(w[0]));
    }
    if (decl.generators.empty())
      throw Error(Errc::invalid_argument, "panel with no generators");
    d.panels[idx] = std::move(decl);
  }
  for (int p = 0; p < 3; ++p)
    if (!seen[p])
      throw Error(Errc::invalid_argument,
                  "missing panel type pair {" + std::to_string(p) + "," +
                      std::to_string((p + 1) % 3) + "}");
  return d;
}

}  // namespace

std::string GroupDatum::canonical_json() const {
  json j;
  j["name"] = name;
  j["q"] = q;
  std::vector<std::string> gens;
  for (int g = 0; g < symbols.num_generators(); ++g)
    gens.push_back(symbols.name(static_cast<Symbol>(2 * g)));
  j["generators"] = gens;
  std::vector<std::string> rels;
  for (const auto& r : relators) rels.push_back(symbols.render(r));
  j["relators"] = rels;
  j["panels"] = json::array();
  for (int p = 0; p < 3; ++p) {
    json pj;
    pj["type_pair"] = {p, (p + 1) % 3};
    std::vector<std::string> pg;
    for (Symbol s : panels[p].generators) pg.push_back(symbols.name(s));
    pj["generators"] = pg;
    j["panels"].push_back(pj);
  }
  return j.dump();
}

GroupDatum parse_group_datum(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse, std::string("group datum: ") + e.what());
  }
  return from_json(j);
}

const std::string& preset_json(const std::string& name) {
  if (name == "paper-q2") return kPaperQ2;
  throw Error(Errc::invalid_argument, "unknown preset: " + name);
}

GroupDatum preset_datum(const std::string& name) { return parse_group_datum(preset_json(name)); }

}  // namespace a2ck::group
