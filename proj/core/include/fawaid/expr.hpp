#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fawaid/exact.hpp"

namespace fawaid {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree over named unknowns and parameters.
/// Semantics are exact-rational: a root node denotes the nonnegative (for
/// even index) rational k-th root and is undefined when none exists.
class Expr {
 public:
  enum class Kind { Constant, Variable, Parameter, Add, Sub, Mul, Div, Pow, Root };

  Kind kind() const { return kind_; }
  const Rational& value() const { return value_; }
  const std::string& name() const { return name_; }
  const ExprPtr& lhs() const { return lhs_; }
  const ExprPtr& rhs() const { return rhs_; }
  unsigned exponent() const { return index_; }  // Pow
  unsigned index() const { return index_; }     // Root, >= 2

  static ExprPtr constant(Rational v);
  static ExprPtr variable(std::string name);
  static ExprPtr parameter(std::string name);
  static ExprPtr add(ExprPtr a, ExprPtr b);
  static ExprPtr sub(ExprPtr a, ExprPtr b);
  static ExprPtr mul(ExprPtr a, ExprPtr b);
  static ExprPtr div(ExprPtr a, ExprPtr b);
  static ExprPtr pow(ExprPtr base, unsigned exponent);
  static ExprPtr root(ExprPtr arg, unsigned index);

 private:
  Expr() = default;
  static ExprPtr make_binary(Kind k, ExprPtr a, ExprPtr b);
  Kind kind_ = Kind::Constant;
  Rational value_;
  std::string name_;
  ExprPtr lhs_, rhs_;
  unsigned index_ = 0;
};

/// Total map from symbol names (variables and parameters) to exact values.
using Assignment = std::map<std::string, Rational>;

/// Thrown when evaluation meets a symbol absent from the assignment; this is
/// a caller contract violation, distinct from an undefined value.
struct MissingSymbolError : std::invalid_argument {
  explicit MissingSymbolError(const std::string& sym)
      : std::invalid_argument("unbound symbol: " + sym), symbol(sym) {}
  std::string symbol;
};

/// Exact value of e under a, or empty when a division by zero occurs or a
/// root argument is not an exact rational k-th power.
std::optional<Rational> eval(const ExprPtr& e, const Assignment& a);

/// Every occurrence of the named symbol (variable or parameter) replaced.
ExprPtr substitute(const ExprPtr& e, const std::string& symbol, const ExprPtr& replacement);

/// Replaces sqrt(v)^k patterns that arise from change-of-variable
/// substitutions: root(pow(v, m), m) collapses to v for variables listed in
/// nonneg. Only used by the reduction pipeline, which introduces such
/// variables as nonnegative roots.
ExprPtr simplify_roots(const ExprPtr& e, const std::set<std::string>& nonneg);

/// All variable/parameter names occurring in e.
std::set<std::string> symbols(const ExprPtr& e);

/// Canonical infix rendering with explicit parentheses and sqrt()/cbrt().
std::string render(const ExprPtr& e);

// ---------------------------------------------------------------------------

/// A single condition of a problem: an equation between two expressions or a
/// rational-square / rational-cube predicate.
struct Relation {
  enum class Kind { Equals, IsSquare, IsCube };
  Kind kind = Kind::Equals;
  ExprPtr lhs;
  ExprPtr rhs;  // null for predicates

  static Relation equals(ExprPtr l, ExprPtr r) { return {Kind::Equals, std::move(l), std::move(r)}; }
  static Relation is_square(ExprPtr e) { return {Kind::IsSquare, std::move(e), nullptr}; }
  static Relation is_cube(ExprPtr e) { return {Kind::IsCube, std::move(e), nullptr}; }
};

std::string render(const Relation& r);
std::set<std::string> symbols(const Relation& r);

enum class Verdict { Holds, Fails, Undefined };
std::string to_string(Verdict v);

/// Per-relation outcome of checking a candidate assignment, with the
/// evaluated side values as witnesses.
struct SatisfactionReport {
  struct Entry {
    std::string relation;
    Verdict verdict = Verdict::Undefined;
    std::optional<Rational> lhs_value;
    std::optional<Rational> rhs_value;
  };
  std::vector<Entry> entries;
  Verdict overall = Verdict::Holds;  // Holds iff every entry holds
};

Verdict check_relation(const Relation& r, const Assignment& a);
SatisfactionReport check_relations(const std::vector<Relation>& rels, const Assignment& a);

}  // namespace fawaid
