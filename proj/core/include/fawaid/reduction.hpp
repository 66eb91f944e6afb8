#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fawaid/catalog.hpp"
#include "fawaid/polynomial.hpp"

namespace fawaid {

enum class StepRule {
  Substitute,
  IsolateRadical,
  SquareBothSides,
  ClearDenominators,
  Collect,
  FactorOutUnknown,
  Shift
};
std::string to_string(StepRule r);

/// One pipeline step. `system` is the full relation system after the step,
/// kept in evaluable form so the audit in verify can replay the derivation
/// pointwise; `before` and `after` are the rendered forms shown to users.
struct TraceStep {
  StepRule rule;
  std::string note;
  std::string before;
  std::string after;
  std::vector<Relation> system;
  /// Substitute steps: index of the defining relation removed from the prior
  /// system (-1 when the step only rewrote in place, as change-of-variable
  /// substitutions do).
  int dropped_index = -1;
  /// FactorOutUnknown steps: the power stripped and its variable.
  size_t factor_power = 0;
  std::string factor_var;
};

/// What the result polynomial means for solutions of the original system.
/// Root: rational solutions map to rational roots of `result` (squaring may
/// add spurious roots, never loses one). Square: solutions are exactly the
/// points where `result` evaluates to a rational square.
enum class ReductionTarget { Root, Square };

struct ReductionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotReducible : ReductionError {
  using ReductionError::ReductionError;
};

struct ReductionTrace {
  int problem_id = 0;
  std::string variant;
  std::vector<std::string> unknowns;    // the problem's original unknowns
  Assignment bindings;                  // parameter values baked into the trace
  std::vector<Relation> original;       // system before any step (parameters bound)
  std::vector<TraceStep> steps;
  Polynomial result;
  std::string variable;                 // name of the result polynomial's variable
  ReductionTarget target = ReductionTarget::Root;
  int squaring_count = 0;

  /// Symbols eliminated or introduced along the way, in introduction order;
  /// each expression references only symbols defined later in the list (or
  /// the final variable). Evaluating the list in reverse from a value of the
  /// final variable recovers a full assignment of every intermediate system.
  std::vector<std::pair<std::string, ExprPtr>> definitions;

  /// Candidate assignments stashed when a power of the unknown was factored
  /// out of the polynomial (the unknown = 0 branch).
  std::vector<Assignment> factor_candidates;

  /// Sampling hint for the audit: an expression in the free symbol "t"
  /// mapping a random rational to a final-variable value at which every
  /// radical in the derivation is defined (chord parametrization of the
  /// radicand conic when one is present, t^2 when the final variable itself
  /// sits under a root, t otherwise).
  ExprPtr sample_map;
  /// Change-of-variable symbols, constrained nonnegative; the audit rejects
  /// negative samples for them.
  std::set<std::string> nonneg_vars;

  /// Human description of how a root of `result` maps back to the unknowns.
  std::string solution_map;

  /// Assignment of every symbol (original unknowns, intermediates, bound
  /// parameters) induced by giving the final variable the value v; empty if
  /// some definition is undefined at v.
  std::optional<Assignment> assignment_at(const Rational& v) const;

  /// Same, restricted to the original unknowns plus parameters.
  std::optional<Assignment> original_assignment_at(const Rational& v) const;
};

/// Problems the substitution/radical-elimination pipeline handles.
const std::vector<int>& reducible_problems();
bool is_reducible(int id);

/// Runs the symbolic pipeline: parameter binding, variable eliminations,
/// radical isolation and squaring, denominator clearing, collection, and the
/// problem-specific factor/shift tail. Throws NotReducible for problems
/// outside reducible_problems() and ReductionError on an unbound parameter.
ReductionTrace reduce_problem(const ProblemSpec& p, const Assignment& bindings,
                              const std::string& variant = "");

/// Resolves bindings against the problem's parameter list, applying catalog
/// defaults; throws ReductionError when a parameter stays unbound and
/// rejects bindings for undeclared names.
Assignment resolve_bindings(const ProblemSpec& p, const Assignment& bindings);

}  // namespace fawaid
