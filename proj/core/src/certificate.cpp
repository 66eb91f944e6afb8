#include "fawaid/certificate.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace fawaid {

using nlohmann::ordered_json;

bool Certificate::operator==(const Certificate& o) const {
  return problem_id == o.problem_id && engine == o.engine && engine_version == o.engine_version &&
         variant == o.variant && bindings == o.bindings && bound == o.bound &&
         outcome == o.outcome && solutions == o.solutions && notes == o.notes;
}

std::string to_string(Certificate::Outcome o) {
  switch (o) {
    case Certificate::Outcome::SolutionsFound:
      return "solutions_found";
    case Certificate::Outcome::NoneBelowBound:
      return "none_below_bound";
    case Certificate::Outcome::NoRationalSolutionsProved:
      return "no_rational_solutions_proved";
  }
  return {};
}

std::optional<Certificate::Outcome> outcome_from_string(std::string_view s) {
  for (auto o : {Certificate::Outcome::SolutionsFound, Certificate::Outcome::NoneBelowBound,
                 Certificate::Outcome::NoRationalSolutionsProved})
    if (to_string(o) == s) return o;
  return std::nullopt;
}

std::optional<EmitFormat> format_from_string(std::string_view s) {
  if (s == "json") return EmitFormat::Json;
  if (s == "md") return EmitFormat::Markdown;
  if (s == "csv") return EmitFormat::Csv;
  return std::nullopt;
}

void canonicalize_solutions(std::vector<Certificate::Solution>& sols) {
  std::sort(sols.begin(), sols.end(), [](const auto& a, const auto& b) {
    return a.values < b.values;
  });
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
}

namespace {

void check_consistency(const Certificate& c) {
  bool empty = c.solutions.empty();
  if (c.outcome == Certificate::Outcome::SolutionsFound && empty)
    throw std::invalid_argument("certificate claims solutions but lists none");
  if (c.outcome != Certificate::Outcome::SolutionsFound && !empty)
    throw std::invalid_argument("certificate lists solutions under a no-solution outcome");
}

ordered_json assignment_json(const Assignment& a) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : a) j[k] = to_string(v);
  return j;
}

std::string assignment_text(const Assignment& a) {
  std::string out;
  for (const auto& [k, v] : a) {
    if (!out.empty()) out += ", ";
    out += k + " = " + to_string(v);
  }
  return out;
}

std::string emit_json(const Certificate& c, bool timing) {
  ordered_json j;
  j["schema"] = kCertificateSchema;
  j["problem"] = c.problem_id;
  j["engine"] = c.engine;
  j["engine_version"] = c.engine_version;
  if (!c.variant.empty()) j["variant"] = c.variant;
  j["bindings"] = assignment_json(c.bindings);
  if (c.bound) {
    j["bound"] = ordered_json::object();
    j["bound"]["kind"] = c.bound->kind;
    j["bound"]["value"] = to_string(c.bound->value);
  }
  j["outcome"] = to_string(c.outcome);
  j["solutions"] = ordered_json::array();
  for (const auto& s : c.solutions) {
    ordered_json sj;
    sj["values"] = assignment_json(s.values);
    sj["degenerate"] = s.degenerate;
    j["solutions"].push_back(std::move(sj));
  }
  j["notes"] = c.notes;
  if (timing) j["elapsed_ms"] = c.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string emit_markdown(const Certificate& c, bool timing) {
  std::ostringstream os;
  os << "## Problem " << c.problem_id << " - " << c.engine << "\n\n";
  if (!c.variant.empty()) os << "- variant: " << c.variant << "\n";
  if (!c.bindings.empty()) os << "- bindings: " << assignment_text(c.bindings) << "\n";
  if (c.bound) os << "- " << c.bound->kind << ": " << to_string(c.bound->value) << "\n";
  os << "- outcome: **" << to_string(c.outcome) << "**\n";
  os << "- engine version: " << c.engine_version << "\n";
  if (timing) os << "- elapsed: " << c.elapsed_ms << " ms\n";
  if (!c.solutions.empty()) {
    os << "\n| solution | degenerate |\n|---|---|\n";
    for (const auto& s : c.solutions)
      os << "| " << assignment_text(s.values) << " | " << (s.degenerate ? "yes" : "no") << " |\n";
  }
  if (!c.notes.empty()) {
    os << "\n";
    for (const auto& n : c.notes) os << "> " << n << "\n";
  }
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string emit_csv(const Certificate& c, bool timing) {
  std::ostringstream os;
  os << "problem,engine,variant,bindings,bound_kind,bound_value,outcome,solution,degenerate";
  if (timing) os << ",elapsed_ms";
  os << "\n";
  auto row = [&](const std::string& sol, const std::string& degenerate) {
    os << c.problem_id << "," << csv_escape(c.engine) << "," << csv_escape(c.variant) << ","
       << csv_escape(assignment_text(c.bindings)) << ","
       << (c.bound ? csv_escape(c.bound->kind) : "") << ","
       << (c.bound ? to_string(c.bound->value) : "") << "," << to_string(c.outcome) << ","
       << csv_escape(sol) << "," << degenerate;
    if (timing) os << "," << c.elapsed_ms;
    os << "\n";
  };
  if (c.solutions.empty()) {
    row("", "");
  } else {
    for (const auto& s : c.solutions)
      row(assignment_text(s.values), s.degenerate ? "yes" : "no");
  }
  return os.str();
}

}  // namespace

std::string emit_certificate(const Certificate& c, EmitFormat format, bool include_timing) {
  check_consistency(c);
  switch (format) {
    case EmitFormat::Json:
      return emit_json(c, include_timing);
    case EmitFormat::Markdown:
      return emit_markdown(c, include_timing);
    case EmitFormat::Csv:
      return emit_csv(c, include_timing);
  }
  throw std::invalid_argument("unknown certificate format");
}

Certificate parse_certificate_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  if (j.at("schema").get<std::string>() != kCertificateSchema)
    throw std::invalid_argument("unsupported certificate schema");
  Certificate c;
  c.problem_id = j.at("problem").get<int>();
  c.engine = j.at("engine").get<std::string>();
  c.engine_version = j.at("engine_version").get<std::string>();
  if (j.contains("variant")) c.variant = j["variant"].get<std::string>();
  auto parse_assignment = [](const ordered_json& aj) {
    Assignment a;
    for (auto it = aj.begin(); it != aj.end(); ++it) {
      auto q = parse_rational(it.value().get<std::string>());
      if (!q) throw std::invalid_argument("malformed rational in certificate");
      a[it.key()] = *q;
    }
    return a;
  };
  c.bindings = parse_assignment(j.at("bindings"));
  if (j.contains("bound")) {
    Certificate::Bound b;
    b.kind = j["bound"].at("kind").get<std::string>();
    b.value = Integer(j["bound"].at("value").get<std::string>(), 10);
    c.bound = std::move(b);
  }
  auto o = outcome_from_string(j.at("outcome").get<std::string>());
  if (!o) throw std::invalid_argument("unknown certificate outcome");
  c.outcome = *o;
  for (const auto& sj : j.at("solutions")) {
    Certificate::Solution s;
    s.values = parse_assignment(sj.at("values"));
    s.degenerate = sj.at("degenerate").get<bool>();
    c.solutions.push_back(std::move(s));
  }
  for (const auto& n : j.at("notes")) c.notes.push_back(n.get<std::string>());
  if (j.contains("elapsed_ms")) c.elapsed_ms = j["elapsed_ms"].get<long>();
  return c;
}

}  // namespace fawaid
