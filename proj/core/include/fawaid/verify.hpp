#pragma once

#include <cstdint>

#include "fawaid/catalog.hpp"
#include "fawaid/certificate.hpp"
#include "fawaid/reduction.hpp"

namespace fawaid {

/// Exact back-substitution of a candidate assignment into a problem's
/// relations. No tolerance, no rounding; the single source of truth for
/// every engine output.
SatisfactionReport verify_solution(const ProblemSpec& p, const Assignment& bindings,
                                   const Assignment& a, const std::string& variant = "");

/// True when some unknown of the problem is zero in the assignment; such
/// solutions satisfy the relations only through collapsed cases and are
/// flagged apart from the historically intended positive quantities.
bool is_degenerate(const ProblemSpec& p, const Assignment& a);

struct IdentityCheckResult {
  bool pass = true;
  int points_checked = 0;
  std::string counterexample;  // empty when pass
};

/// Randomized audit of a reduction trace with a fixed seed. Samples rational
/// points for the final variable (components of height <= 50, resampling
/// where anything is undefined) and checks, step by step, that each rewrite
/// preserves solutions: equivalence for substitutions, denominator clearing,
/// collection and shifts; forward implication across squarings and
/// factor-out steps. End to end it checks that whenever the original system
/// holds the reduced polynomial vanishes (or, for square targets, that the
/// original verdict coincides with the square test on the result), and for
/// traces with no squaring it demands full equivalence.
IdentityCheckResult identity_check(const ReductionTrace& t, int samples, std::uint64_t seed);

}  // namespace fawaid
