#include "fawaid/catalog.hpp"

#include <algorithm>
#include <mutex>

#include <json.hpp>

#include "fawaid/sexpr.hpp"

namespace fawaid {

namespace detail {
extern const char* bundled_catalog_json;
}

using nlohmann::ordered_json;

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Congruence:
      return "congruence";
    case Classification::Degree3:
      return "degree3";
    case Classification::Degree4Plus:
      return "degree4plus";
    case Classification::Diophantine:
      return "diophantine";
    case Classification::Multiplicative:
      return "multiplicative";
    case Classification::Missing:
      return "missing";
  }
  return {};
}

std::optional<Classification> classification_from_string(std::string_view s) {
  for (auto c : {Classification::Congruence, Classification::Degree3, Classification::Degree4Plus,
                 Classification::Diophantine, Classification::Multiplicative, Classification::Missing})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

std::set<std::string> ProblemSpec::unknown_set() const {
  return {unknowns.begin(), unknowns.end()};
}

std::set<std::string> ProblemSpec::parameter_set() const {
  std::set<std::string> out;
  for (const auto& p : parameters) out.insert(p.name);
  return out;
}

const std::vector<Relation>& ProblemSpec::relations_for(const std::string& variant) const {
  if (variant.empty()) return relations;
  auto it = variants.find(variant);
  if (it == variants.end())
    throw CatalogError("problem " + std::to_string(id) + " has no variant '" + variant + "'");
  return it->second;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw CatalogError(where + ": " + what);
}

void reject_unknown_fields(const ordered_json& obj, std::initializer_list<const char*> allowed,
                           const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) fail(where, "unknown field '" + it.key() + "'");
  }
}

std::vector<std::string> string_list(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) fail(where, "expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<Relation> parse_relations(const ordered_json& j, const ProblemSpec& p,
                                      const std::string& where) {
  std::vector<Relation> rels;
  for (const auto& text : string_list(j, where)) {
    try {
      rels.push_back(parse_relation_sexpr(text, p.unknown_set(), p.parameter_set()));
    } catch (const SexprError& e) {
      fail(where, std::string(e.what()) + " in relation \"" + text + "\"");
    }
  }
  return rels;
}

ProblemSpec parse_problem(const ordered_json& j) {
  ProblemSpec p;
  if (!j.is_object()) fail("catalog", "problem entries must be objects");
  std::string where = "problem";
  if (j.contains("id") && j["id"].is_number_integer()) {
    p.id = j["id"].get<int>();
    where = "problem " + std::to_string(p.id);
  } else {
    fail(where, "missing integer field 'id'");
  }
  reject_unknown_fields(j,
                        {"id", "title", "prose", "unknowns", "parameters", "relations",
                         "classification", "notes", "citations", "variants"},
                        where);
  for (const char* required : {"title", "prose", "unknowns", "parameters", "relations",
                               "classification", "notes", "citations"})
    if (!j.contains(required)) fail(where, std::string("missing field '") + required + "'");
  p.title = j["title"].get<std::string>();
  p.prose = j["prose"].get<std::string>();
  p.unknowns = string_list(j["unknowns"], where + ".unknowns");
  for (const auto& name : p.unknowns)
    if (name.empty()) fail(where, "empty unknown name");
  if (!j["parameters"].is_array()) fail(where, "'parameters' must be an array");
  for (const auto& pj : j["parameters"]) {
    if (!pj.is_object()) fail(where, "parameter entries must be objects");
    reject_unknown_fields(pj, {"name", "default"}, where + ".parameters");
    ParameterSpec ps;
    if (!pj.contains("name") || !pj["name"].is_string() || pj["name"].get<std::string>().empty())
      fail(where, "parameter without a name");
    ps.name = pj["name"].get<std::string>();
    if (pj.contains("default")) {
      auto q = parse_rational(pj["default"].get<std::string>());
      if (!q) fail(where, "parameter '" + ps.name + "' has a malformed default");
      ps.default_value = *q;
    }
    p.parameters.push_back(std::move(ps));
  }
  {
    std::set<std::string> seen;
    for (const auto& u : p.unknowns)
      if (!seen.insert(u).second) fail(where, "duplicate symbol '" + u + "'");
    for (const auto& ps : p.parameters)
      if (!seen.insert(ps.name).second) fail(where, "duplicate symbol '" + ps.name + "'");
  }
  p.relations = parse_relations(j["relations"], p, where + ".relations");
  auto cls = classification_from_string(j["classification"].get<std::string>());
  if (!cls) fail(where, "unknown classification '" + j["classification"].get<std::string>() + "'");
  p.classification = *cls;
  p.notes = string_list(j["notes"], where + ".notes");
  p.citations = string_list(j["citations"], where + ".citations");
  if (j.contains("variants")) {
    if (!j["variants"].is_object()) fail(where, "'variants' must be an object");
    for (auto it = j["variants"].begin(); it != j["variants"].end(); ++it)
      p.variants[it.key()] = parse_relations(it.value(), p, where + ".variants." + it.key());
  }
  return p;
}

}  // namespace

Catalog load_catalog(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("catalog", "top level must be an object");
  reject_unknown_fields(doc, {"version", "problems"}, "catalog");
  if (!doc.contains("version") || !doc["version"].is_string())
    fail("catalog", "missing string field 'version'");
  if (!doc.contains("problems") || !doc["problems"].is_array())
    fail("catalog", "missing array field 'problems'");

  Catalog c;
  c.version = doc["version"].get<std::string>();
  for (const auto& j : doc["problems"]) c.problems.push_back(parse_problem(j));

  if (c.problems.size() != 33)
    fail("catalog", "expected exactly 33 problems, found " + std::to_string(c.problems.size()));
  std::set<int> ids;
  for (const auto& p : c.problems) {
    if (p.id < 1 || p.id > 33)
      fail("problem " + std::to_string(p.id), "id out of range 1..33");
    if (!ids.insert(p.id).second)
      fail("catalog", "duplicate id " + std::to_string(p.id));
  }
  for (const auto& p : c.problems) {
    std::string where = "problem " + std::to_string(p.id);
    bool should_be_missing = p.id == 7 || p.id == 24;
    if (should_be_missing != (p.classification == Classification::Missing))
      fail(where, should_be_missing ? "must carry the missing classification"
                                    : "only problems 7 and 24 may be missing");
    if ((p.classification == Classification::Missing) != p.relations.empty())
      fail(where, "missing entries and only missing entries have no relations");
  }
  std::sort(c.problems.begin(), c.problems.end(),
            [](const ProblemSpec& a, const ProblemSpec& b) { return a.id < b.id; });
  return c;
}

std::string save_catalog(const Catalog& c) {
  ordered_json doc;
  doc["version"] = c.version;
  doc["problems"] = ordered_json::array();
  for (const auto& p : c.problems) {
    ordered_json j;
    j["id"] = p.id;
    j["title"] = p.title;
    j["prose"] = p.prose;
    j["unknowns"] = p.unknowns;
    j["parameters"] = ordered_json::array();
    for (const auto& ps : p.parameters) {
      ordered_json pj;
      pj["name"] = ps.name;
      if (ps.default_value) pj["default"] = to_string(*ps.default_value);
      j["parameters"].push_back(pj);
    }
    j["relations"] = ordered_json::array();
    for (const auto& r : p.relations) j["relations"].push_back(to_sexpr(r));
    j["classification"] = to_string(p.classification);
    j["notes"] = p.notes;
    j["citations"] = p.citations;
    if (!p.variants.empty()) {
      ordered_json vj = ordered_json::object();
      for (const auto& [name, rels] : p.variants) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rels) arr.push_back(to_sexpr(r));
        vj[name] = arr;
      }
      j["variants"] = vj;
    }
    doc["problems"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

const std::string& bundled_catalog_text() {
  static const std::string text = detail::bundled_catalog_json;
  return text;
}

const Catalog& bundled_catalog() {
  static std::once_flag flag;
  static Catalog catalog;
  std::call_once(flag, [] { catalog = load_catalog(bundled_catalog_text()); });
  return catalog;
}

const ProblemSpec& get_problem(const Catalog& c, int id) {
  for (const auto& p : c.problems)
    if (p.id == id) return p;
  throw std::out_of_range("problem id out of range: " + std::to_string(id));
}

std::vector<const ProblemSpec*> list_problems(const Catalog& c,
                                              std::optional<Classification> filter) {
  std::vector<const ProblemSpec*> out;
  for (const auto& p : c.problems)
    if (!filter || p.classification == *filter) out.push_back(&p);
  return out;
}

}  // namespace fawaid
