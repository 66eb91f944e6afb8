#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fawaid/expr.hpp"

namespace fawaid {

enum class Classification { Congruence, Degree3, Degree4Plus, Diophantine, Multiplicative, Missing };

std::string to_string(Classification c);
std::optional<Classification> classification_from_string(std::string_view s);

struct ParameterSpec {
  std::string name;
  std::optional<Rational> default_value;  // absent means the CLI must bind it
};

/// One of the thirty-three problems: prose statement, declared symbols, the
/// encoded relation system, and bookkeeping notes about encoding decisions.
struct ProblemSpec {
  int id = 0;
  std::string title;
  std::string prose;
  std::vector<std::string> unknowns;
  std::vector<ParameterSpec> parameters;
  std::vector<Relation> relations;
  Classification classification = Classification::Missing;
  std::vector<std::string> notes;
  std::vector<std::string> citations;
  /// Alternate encodings selectable by name (problem 20 ships one for the
  /// ambiguous "ten times its square root" reading).
  std::map<std::string, std::vector<Relation>> variants;

  std::set<std::string> unknown_set() const;
  std::set<std::string> parameter_set() const;
  const std::vector<Relation>& relations_for(const std::string& variant) const;
};

struct Catalog {
  std::string version;
  std::vector<ProblemSpec> problems;  // sorted by id
};

/// Raised on any schema or invariant violation while loading; the message
/// names the offending entry.
struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses and fully validates a catalog document (UTF-8 JSON, schema in
/// docs/catalog-format.md). Checks: exactly 33 entries, unique ids 1..33,
/// exactly {7, 24} carry the missing classification (and only those have no
/// relations), declared-symbol closure of every relation, no unknown fields.
Catalog load_catalog(const std::string& json_text);

/// Canonical serialization; load(save(c)) == c.
std::string save_catalog(const Catalog& c);

/// The catalog compiled into the library (core/data/catalog.json).
const Catalog& bundled_catalog();
const std::string& bundled_catalog_text();

const ProblemSpec& get_problem(const Catalog& c, int id);
std::vector<const ProblemSpec*> list_problems(const Catalog& c,
                                              std::optional<Classification> filter = {});

}  // namespace fawaid
