#include "fawaid/verify.hpp"

#include <random>
#include <sstream>

namespace fawaid {

SatisfactionReport verify_solution(const ProblemSpec& p, const Assignment& bindings,
                                   const Assignment& a, const std::string& variant) {
  Assignment full = bindings;
  for (const auto& [k, v] : a) full[k] = v;
  for (const auto& u : p.unknowns)
    if (!full.count(u)) throw MissingSymbolError(u);
  for (const auto& ps : p.parameters)
    if (!full.count(ps.name)) {
      if (!ps.default_value) throw MissingSymbolError(ps.name);
      full[ps.name] = *ps.default_value;
    }
  return check_relations(p.relations_for(variant), full);
}

bool is_degenerate(const ProblemSpec& p, const Assignment& a) {
  for (const auto& u : p.unknowns) {
    auto it = a.find(u);
    if (it != a.end() && it->second == 0) return true;
  }
  return false;
}

namespace {

Verdict system_verdict(const std::vector<Relation>& rels, const Assignment& a) {
  Verdict overall = Verdict::Holds;
  for (const auto& r : rels) {
    Verdict v = check_relation(r, a);
    if (v == Verdict::Undefined) return Verdict::Undefined;
    if (v == Verdict::Fails) overall = Verdict::Fails;
  }
  return overall;
}

// Residual of a relation: lhs - rhs for equations, the tested value for the
// square/cube predicates. Empty when any side is undefined.
std::optional<Rational> residual(const Relation& r, const Assignment& a) {
  auto l = eval(r.lhs, a);
  if (!l) return std::nullopt;
  if (r.kind != Relation::Kind::Equals) return l;
  auto rv = eval(r.rhs, a);
  if (!rv) return std::nullopt;
  return Rational(*l - *rv);
}

std::string describe(const Assignment& a) {
  std::string out;
  for (const auto& [k, v] : a) {
    if (!out.empty()) out += ", ";
    out += k + " = " + to_string(v);
  }
  return out;
}

struct Sampler {
  std::mt19937_64 rng;
  std::uniform_int_distribution<long> num{-50, 50};
  std::uniform_int_distribution<long> den{1, 50};
  Rational draw() { return make_rational(num(rng), den(rng)); }
};

}  // namespace

IdentityCheckResult identity_check(const ReductionTrace& t, int samples, std::uint64_t seed) {
  IdentityCheckResult result;
  Sampler sampler{std::mt19937_64(seed)};

  auto fail = [&](const std::string& what, const Assignment& at) {
    result.pass = false;
    result.counterexample = what + " at " + describe(at);
  };

  // Cross-sample ratio accumulator per collect step: the claimed rewrite is
  // proportional, so after/before must be one constant across all points.
  std::map<size_t, std::optional<Rational>> collect_ratio;

  ExprPtr hint = t.sample_map ? t.sample_map : Expr::variable("t");
  bool reject_negative = t.nonneg_vars.count(t.variable) > 0;

  const int max_draws = samples * 400;
  int draws = 0;
  while (result.points_checked < samples && draws < max_draws) {
    ++draws;
    auto v_opt = eval(hint, {{"t", sampler.draw()}});
    if (!v_opt) continue;
    Rational v = *v_opt;
    if (reject_negative && sgn(v) < 0) continue;
    auto full_opt = t.assignment_at(v);
    if (!full_opt) continue;
    const Assignment& full = *full_opt;

    const std::vector<Relation>* prev = &t.original;
    bool factored_at_zero = false;  // this sample sits on a factored-out root
    for (size_t si = 0; si < t.steps.size(); ++si) {
      const TraceStep& step = t.steps[si];
      Verdict before = system_verdict(*prev, full);
      Verdict after = system_verdict(step.system, full);
      switch (step.rule) {
        case StepRule::Substitute: {
          // The sampled point satisfies the definition by construction, so
          // residuals of the surviving relations must be unchanged.
          for (size_t j = 0; j < step.system.size(); ++j) {
            size_t bj = (step.dropped_index >= 0 && j >= static_cast<size_t>(step.dropped_index))
                            ? j + 1
                            : j;
            if (bj >= prev->size()) break;
            auto rb = residual((*prev)[bj], full);
            auto ra = residual(step.system[j], full);
            if (rb && ra && *rb != *ra) {
              fail("substitution changed a relation's residual (" + step.note + ")", full);
              return result;
            }
          }
          break;
        }
        case StepRule::SquareBothSides:
          if (before == Verdict::Holds && after != Verdict::Holds) {
            fail("a squaring step lost a solution (" + step.note + ")", full);
            return result;
          }
          break;
        case StepRule::ClearDenominators:
          if (before != Verdict::Undefined && after != before) {
            fail("clearing denominators changed the verdict", full);
            return result;
          }
          break;
        case StepRule::IsolateRadical:
          if (before != Verdict::Undefined && after != Verdict::Undefined && before != after) {
            fail("isolating the radical changed the verdict (" + step.note + ")", full);
            return result;
          }
          break;
        case StepRule::Collect: {
          if (before != Verdict::Undefined && after != Verdict::Undefined && before != after) {
            fail("collection changed the verdict", full);
            return result;
          }
          // Proportionality: result must be a constant multiple of the
          // previous single relation's residual.
          if (prev->size() == 1 && step.system.size() == 1) {
            auto rb = residual((*prev)[0], full);
            auto ra = residual(step.system[0], full);
            if (rb && ra) {
              if ((*rb == 0) != (*ra == 0)) {
                fail("collection moved a zero of the relation", full);
                return result;
              }
              if (*rb != 0) {
                Rational ratio = *ra / *rb;
                auto& slot = collect_ratio[si];
                if (!slot) {
                  slot = ratio;
                } else if (*slot != ratio) {
                  fail("collection is not a constant rescaling (ratios " + to_string(*slot) +
                           " vs " + to_string(ratio) + ")",
                       full);
                  return result;
                }
              }
            }
          }
          break;
        }
        case StepRule::FactorOutUnknown: {
          auto rb = residual((*prev)[0], full);
          auto ra = residual(step.system[0], full);
          auto xv = full.find(step.factor_var);
          if (xv != full.end() && xv->second == 0) factored_at_zero = true;
          if (rb && ra && xv != full.end()) {
            Rational scale(1);
            for (size_t i = 0; i < step.factor_power; ++i) scale *= xv->second;
            if (*rb != scale * *ra) {
              fail("factoring does not reproduce the previous polynomial", full);
              return result;
            }
          }
          break;
        }
        case StepRule::Shift: {
          auto rb = residual((*prev)[0], full);
          auto ra = residual(step.system[0], full);
          if (rb && ra && *rb != *ra) {
            fail("the shifted polynomial disagrees with the original (" + step.note + ")", full);
            return result;
          }
          break;
        }
      }
      prev = &step.system;
    }

    // End-to-end checks against the result polynomial.
    Verdict original = system_verdict(t.original, full);
    Rational value = t.result(v);
    // The stored result must be the polynomial the final step collected.
    if (!t.steps.empty() && t.steps.back().system.size() == 1) {
      auto final_res = residual(t.steps.back().system[0], full);
      if (final_res && *final_res != value) {
        fail("the result polynomial disagrees with the final step (snapshot " +
                 to_string(*final_res) + ", result " + to_string(value) + ")",
             full);
        return result;
      }
    }
    if (t.target == ReductionTarget::Square) {
      if (original != Verdict::Undefined && (original == Verdict::Holds) != is_square(value)) {
        fail("square-target mismatch: original " + to_string(original) + " but result value " +
                 to_string(value),
             full);
        return result;
      }
    } else {
      // A point sitting on a factored-out root solves the system without
      // being a root of the remaining polynomial; decide carries those
      // separately as factor candidates.
      if (original == Verdict::Holds && value != 0 && !factored_at_zero) {
        fail("the original system holds but the polynomial does not vanish (value " +
                 to_string(value) + ")",
             full);
        return result;
      }
      if (t.squaring_count == 0 && original != Verdict::Undefined && !factored_at_zero &&
          (original == Verdict::Holds) != (value == 0)) {
        fail("no squaring was used, yet the polynomial is not equivalent to the system", full);
        return result;
      }
    }
    ++result.points_checked;
  }

  if (result.points_checked < samples) {
    result.pass = false;
    std::ostringstream os;
    os << "could only evaluate " << result.points_checked << " of " << samples
       << " sample points (definitions undefined too often)";
    result.counterexample = os.str();
  }
  return result;
}

}  // namespace fawaid
