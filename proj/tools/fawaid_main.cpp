// fawaid: workbench for the thirty-three arithmetic problems of Ibn
// al-Khawwam: catalog browsing, symbolic reduction, rationality decisions,
// and bounded exhaustive searches with verifiable certificates.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fawaid/catalog.hpp"
#include "fawaid/engines.hpp"
#include "fawaid/sexpr.hpp"
#include "fawaid/verify.hpp"

using namespace fawaid;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoneBelowBound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCatalog = 3;

struct Options {
  std::string catalog_path;
  std::string format = "md";
  std::string variant;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 20250808;
  std::vector<std::string> params;
  std::vector<std::string> assigns;
};

Catalog g_catalog;

void load_the_catalog(const std::string& path_flag) {
  std::string path = path_flag;
  if (path.empty())
    if (const char* env = std::getenv("FAWAID_CATALOG")) path = env;
  if (path.empty()) {
    g_catalog = bundled_catalog();
    return;
  }
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  g_catalog = load_catalog(buf.str());
}

Assignment parse_pairs(const std::vector<std::string>& pairs, const char* what) {
  Assignment out;
  for (const auto& p : pairs) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0)
      throw CLI::ValidationError(std::string(what) + " expects name=value, got '" + p + "'");
    auto q = parse_rational(p.substr(eq + 1));
    if (!q)
      throw CLI::ValidationError(std::string(what) + " '" + p +
                                 "': value must be an exact integer or fraction like 41/12 "
                                 "(decimals are rejected to preserve exactness)");
    out[p.substr(0, eq)] = *q;
  }
  return out;
}

EmitFormat format_of(const Options& o) {
  auto f = format_from_string(o.format);
  if (!f) throw CLI::ValidationError("unknown format '" + o.format + "' (json, md, csv)");
  return *f;
}

void print_certificate(const Certificate& cert, const Options& o) {
  std::cout << emit_certificate(cert, format_of(o));
  std::cerr << "# elapsed: " << cert.elapsed_ms << " ms\n";
}

int exit_for(const Certificate& cert) {
  return cert.outcome == Certificate::Outcome::NoneBelowBound ? kExitNoneBelowBound : kExitOk;
}

// --- subcommands -------------------------------------------------------------

int cmd_list(const std::string& cls_filter) {
  std::optional<Classification> filter;
  if (!cls_filter.empty()) {
    filter = classification_from_string(cls_filter);
    if (!filter)
      throw CLI::ValidationError("unknown class '" + cls_filter +
                                 "' (congruence, degree3, degree4plus, diophantine, "
                                 "multiplicative, missing)");
  }
  for (const auto* p : list_problems(g_catalog, filter))
    std::cout << p->id << "\t" << to_string(p->classification) << "\t" << p->title << "\n";
  return kExitOk;
}

int cmd_show(int id) {
  const auto& p = get_problem(g_catalog, id);
  std::cout << "Problem " << p.id << " - " << p.title << "\n";
  std::cout << "classification: " << to_string(p.classification) << "\n";
  std::cout << "prose: " << p.prose << "\n";
  if (!p.unknowns.empty()) {
    std::cout << "unknowns:";
    for (const auto& u : p.unknowns) std::cout << " " << u;
    std::cout << "\n";
  }
  if (!p.parameters.empty()) {
    std::cout << "parameters:";
    for (const auto& ps : p.parameters) {
      std::cout << " " << ps.name;
      if (ps.default_value) std::cout << " (default " << to_string(*ps.default_value) << ")";
    }
    std::cout << "\n";
  }
  if (!p.relations.empty()) {
    std::cout << "relations:\n";
    for (const auto& r : p.relations)
      std::cout << "  " << render(r) << "\n    [sexpr] " << to_sexpr(r) << "\n";
  }
  for (const auto& [name, rels] : p.variants) {
    std::cout << "variant '" << name << "':\n";
    for (const auto& r : rels) std::cout << "  " << render(r) << "\n";
  }
  if (!p.notes.empty()) {
    std::cout << "notes:\n";
    for (const auto& n : p.notes) std::cout << "  - " << n << "\n";
  }
  if (!p.citations.empty()) {
    std::cout << "citations:\n";
    for (const auto& c : p.citations) std::cout << "  - " << c << "\n";
  }
  return kExitOk;
}

void print_trace(const ReductionTrace& t) {
  std::cout << "reduce: problem " << t.problem_id;
  if (!t.variant.empty()) std::cout << " (variant " << t.variant << ")";
  std::cout << "\n";
  if (!t.bindings.empty()) {
    std::cout << "bindings:";
    for (const auto& [k, v] : t.bindings) std::cout << " " << k << "=" << to_string(v);
    std::cout << "\n";
  }
  std::cout << "system: ";
  for (size_t i = 0; i < t.original.size(); ++i)
    std::cout << (i ? ";  " : "") << render(t.original[i]);
  std::cout << "\n";
  for (size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    std::cout << "step " << i + 1 << " [" << to_string(s.rule) << "] " << s.note << "\n";
    std::cout << "    => " << s.after << "\n";
  }
  std::cout << "squarings: " << t.squaring_count << "\n";
  std::cout << "solution map: " << t.solution_map << "\n";
  if (t.problem_id == 6) {
    for (const auto& line : problem6_comparison(t).lines) std::cout << line << "\n";
  }
  if (t.problem_id == 28) {
    for (const auto& line : problem28_discriminant_verdict(t).lines) std::cout << line << "\n";
  }
  std::cout << (t.target == ReductionTarget::Square ? "result (must be a rational square): "
                                                    : "result: ")
            << t.result.render(t.variable) << "\n";
}

int cmd_reduce(int id, const Options& o) {
  const auto& p = get_problem(g_catalog, id);
  auto trace = reduce_problem(p, parse_pairs(o.params, "--param"), o.variant);
  print_trace(trace);
  return kExitOk;
}

int cmd_decide(int id, const Options& o) {
  const auto& p = get_problem(g_catalog, id);
  auto cert = decide_rational(p, parse_pairs(o.params, "--param"), o.variant);
  print_certificate(cert, o);
  return exit_for(cert);
}

int cmd_search(int id, const Options& o, const std::string& bound_str,
               const std::string& height_str) {
  const auto& p = get_problem(g_catalog, id);
  if (bound_str.empty() == height_str.empty())
    throw CLI::ValidationError("search needs exactly one of --bound B or --height H");
  Assignment bindings = parse_pairs(o.params, "--param");
  Certificate cert;
  if (!bound_str.empty())
    cert = search_integer(p, bindings, Integer(bound_str, 10), o.threads, o.variant);
  else
    cert = search_rational(p, bindings, Integer(height_str, 10), o.threads, o.variant);
  print_certificate(cert, o);
  return exit_for(cert);
}

int cmd_verify(int id, const Options& o) {
  const auto& p = get_problem(g_catalog, id);
  Assignment assigns = parse_pairs(o.assigns, "--assign");
  auto report = verify_solution(p, parse_pairs(o.params, "--param"), assigns, o.variant);
  for (const auto& e : report.entries) {
    std::cout << to_string(e.verdict) << "  " << e.relation;
    if (e.lhs_value) std::cout << "  [lhs = " << to_string(*e.lhs_value);
    if (e.rhs_value) std::cout << ", rhs = " << to_string(*e.rhs_value);
    if (e.lhs_value) std::cout << "]";
    std::cout << "\n";
  }
  std::cout << "overall: " << to_string(report.overall) << "\n";
  return report.overall == Verdict::Holds ? kExitOk : kExitNoneBelowBound;
}

// Sample bindings used by `report --all` for problems whose parameters carry
// no catalog default; printed in each dossier.
Assignment report_bindings(int id) {
  switch (id) {
    case 4:
      return {{"n", Rational(24)}};
    case 5:
      return {{"n", Rational(32)}};
    case 6:
      return {{"n", Rational(20)}};
    case 15:
      return {{"n", Rational(21)}};
    case 25:
      return {{"a", Rational(10)}, {"b", Rational(5)}};
    case 26:
      return {{"n", Rational(17)}};
    case 27:
      return {{"n", Rational(1729)}};
    case 29:
      return {{"a", Rational(10)}, {"b", Rational(11)}};
    case 30:
      return {{"a", Rational(216)}};
    case 31:
      return {{"a", make_rational(9, 10)}};
    case 33:
      return {{"n", Rational(5)}};
    default:
      return {};
  }
}

Integer report_integer_bound(int id) {
  switch (id) {
    case 2:
      return 20;
    case 8:
      return 30;
    case 10:
      return 5;
    case 12:
      return 50;
    case 3:
      return 50;
    case 27:
      return 13;
    default:
      return 50;
  }
}

int cmd_report(const Options& o) {
  for (const auto* pp : list_problems(g_catalog)) {
    const auto& p = *pp;
    std::cout << "==== Problem " << p.id << " - " << p.title << " ["
              << to_string(p.classification) << "] ====\n";
    std::cout << p.prose << "\n";
    if (p.classification == Classification::Missing) {
      for (const auto& n : p.notes) std::cout << "note: " << n << "\n";
      std::cout << "\n";
      continue;
    }
    Assignment bindings = report_bindings(p.id);
    if (!bindings.empty()) {
      std::cout << "sample bindings:";
      for (const auto& [k, v] : bindings) std::cout << " " << k << "=" << to_string(v);
      std::cout << "\n";
    }
    if (is_reducible(p.id)) {
      try {
        auto trace = reduce_problem(p, bindings, o.variant.empty() ? "" : o.variant);
        print_trace(trace);
        auto check = identity_check(trace, 20, o.seed);
        std::cout << "identity check (20 seeded samples): " << (check.pass ? "pass" : "FAIL")
                  << "\n";
        auto cert = decide_rational(p, bindings, "");
        std::cout << emit_certificate(cert, format_of(o));
      } catch (const EngineError& e) {
        std::cout << "decide: " << e.what() << "\n";
        if (p.unknowns.size() == 1) {
          auto cert = search_rational(p, bindings, Integer(12), o.threads, "");
          std::cout << emit_certificate(cert, format_of(o));
        }
      }
    }
    if (p.id == 30) {
      auto cert = decide_rational(p, bindings, "");
      std::cout << emit_certificate(cert, format_of(o));
    }
    bool searchable = !is_reducible(p.id) && p.id != 30;
    if (searchable) {
      try {
        Certificate cert;
        if (p.id == 18 || p.id == 11 || p.id == 13 || p.id == 14 || p.id == 19 ||
            p.id == 23)
          cert = search_rational(p, bindings, Integer(p.id == 18 ? 26 : 12), o.threads, "");
        else
          cert = search_integer(p, bindings, report_integer_bound(p.id), o.threads, "");
        std::cout << emit_certificate(cert, format_of(o));
      } catch (const EngineError& e) {
        std::cout << "search: " << e.what() << "\n";
      }
    }
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"fawaid - exact workbench for Ibn al-Khawwam's thirty-three arithmetic problems"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too

  Options opt;
  app.add_option("--catalog", opt.catalog_path,
                 "catalog JSON path (default: FAWAID_CATALOG or the bundled catalog)");
  app.add_option("--format", opt.format, "output format: json, md, csv")->capture_default_str();
  app.add_option("--threads", opt.threads, "worker threads (1 forces serial execution)")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized audits")->capture_default_str();
  app.add_option("--variant", opt.variant, "catalog relation variant (problem 20: alt-root)");

  std::string cls;
  auto* cmd_list_p = app.add_subcommand("list", "list problems");
  cmd_list_p->add_option("--class", cls, "filter by classification");

  int id = 0;
  auto* cmd_show_p = app.add_subcommand("show", "print one problem's catalog entry");
  cmd_show_p->add_option("id", id, "problem id (1..33)")->required();

  auto* cmd_reduce_p = app.add_subcommand("reduce", "run the symbolic reduction pipeline");
  cmd_reduce_p->add_option("id", id)->required();
  cmd_reduce_p->add_option("--param", opt.params, "parameter binding name=rational");

  auto* cmd_decide_p = app.add_subcommand("decide", "decide rational solubility where complete");
  cmd_decide_p->add_option("id", id)->required();
  cmd_decide_p->add_option("--param", opt.params, "parameter binding name=rational");

  std::string bound_str, height_str;
  auto* cmd_search_p = app.add_subcommand("search", "bounded exhaustive search");
  cmd_search_p->add_option("id", id)->required();
  cmd_search_p->add_option("--param", opt.params, "parameter binding name=rational");
  cmd_search_p->add_option("--bound", bound_str, "integer bound B (unknowns in 0..B)");
  cmd_search_p->add_option("--height", height_str, "rational height bound H");

  auto* cmd_verify_p = app.add_subcommand("verify", "verify a candidate assignment exactly");
  cmd_verify_p->add_option("id", id)->required();
  cmd_verify_p->add_option("--param", opt.params, "parameter binding name=rational");
  cmd_verify_p->add_option("--assign", opt.assigns, "unknown binding name=rational");

  bool report_all = false;
  auto* cmd_report_p = app.add_subcommand("report", "dossier over the whole catalog");
  cmd_report_p->add_flag("--all", report_all, "run every problem");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    load_the_catalog(opt.catalog_path);
    if (*cmd_list_p) return cmd_list(cls);
    if (*cmd_show_p) return cmd_show(id);
    if (*cmd_reduce_p) return cmd_reduce(id, opt);
    if (*cmd_decide_p) return cmd_decide(id, opt);
    if (*cmd_search_p) return cmd_search(id, opt, bound_str, height_str);
    if (*cmd_verify_p) return cmd_verify(id, opt);
    if (*cmd_report_p) {
      if (!report_all) throw CLI::ValidationError("report needs --all");
      return cmd_report(opt);
    }
  } catch (const CatalogError& e) {
    std::cerr << "catalog error: " << e.what() << "\n";
    return kExitCatalog;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
