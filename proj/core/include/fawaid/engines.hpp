#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "fawaid/catalog.hpp"
#include "fawaid/certificate.hpp"
#include "fawaid/polynomial.hpp"
#include "fawaid/reduction.hpp"

namespace fawaid {

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Decides rational solubility along the reduction: rational roots of the
/// reduced polynomial (or factor-pair witnesses for square targets) are
/// back-substituted and verified exactly; spurious roots introduced by
/// squaring are discarded. The no-rational-solutions outcome is only issued
/// by this complete path. Problems 30 and 31 get their exact cube-root
/// deciders; everything else reducible goes through the polynomial.
Certificate decide_rational(const ProblemSpec& p, const Assignment& bindings,
                            const std::string& variant = "");

/// Exhaustive integer search with all unknowns in 0..bound (per-problem
/// domain notes: problems seeking positive quantities start at 1, and
/// problems 3, 12, 26, 27 solve their last unknown exactly instead of
/// enumerating it). Every reported solution is verified against the catalog
/// relations.
Certificate search_integer(const ProblemSpec& p, const Assignment& bindings, const Integer& bound,
                           unsigned threads = 1, const std::string& variant = "");

/// Exhaustive search over reduced fractions of height <= height (height of
/// a/b in lowest terms is max(|a|, b)). Problem 18 delegates to the congruum
/// engine with the height read as a denominator bound, which covers the
/// whole height ball and more.
Certificate search_rational(const ProblemSpec& p, const Assignment& bindings,
                            const Integer& height, unsigned threads = 1,
                            const std::string& variant = "");

// --- number-theory engines --------------------------------------------------

/// Three squares r^2 < s^2 < t^2 in arithmetic progression with common
/// difference n*k^2; induces x = s/k with x^2 +- n both rational squares.
struct CongruumWitness {
  Integer r, s, t, k;
  Rational x;  // s/k
};
std::vector<CongruumWitness> congruum_triples(const Integer& n, const Integer& k_bound,
                                              unsigned threads = 1);
Certificate congruum_search(const Integer& n, const Integer& k_bound, unsigned threads = 1);

/// Primitive Pythagorean triples (a, b, c), c <= limit, from Euclid's
/// parametrization a = m^2 - n^2, b = 2mn, c = m^2 + n^2 over coprime
/// m > n >= 1 of opposite parity. Sorted by c, then a.
std::vector<std::array<Integer, 3>> euclid_triples(const Integer& limit);

/// All 0 <= x <= y <= bound with x^3 + y^3 = n.
std::vector<std::pair<Integer, Integer>> sum_two_cubes(const Integer& n, const Integer& bound);

/// All x, y >= 0 with x <= bound and x^3 + y^2 = n.
std::vector<std::pair<Integer, Integer>> cube_plus_square(const Integer& n, const Integer& bound);

/// Witness for x^3 y^3 z^3 = a: exists iff a is a rational cube, in which
/// case (cbrt(a), 1, 1) is returned.
std::optional<std::array<Rational, 3>> product_of_cubes(const Rational& a);

/// The salary x with (x/30) sqrt(x) = a, i.e. x^3 = 900 a^2; exists iff
/// 900 a^2 is a rational cube. Verified by re-evaluation before returning.
std::optional<Rational> salary_problem(const Rational& a);

// --- per-problem report hooks -----------------------------------------------

/// Exact-discriminant adjudication for problem 28's printed claim that the
/// depressed cubic has negative discriminant and only complex solutions.
struct DiscriminantVerdict {
  Polynomial cubic;
  CubicClassification classification;
  bool claim_confirmed = false;  // the source claims a negative discriminant
  std::vector<std::string> lines;
};
DiscriminantVerdict problem28_discriminant_verdict(const ReductionTrace& t);

/// Side-by-side comparison of problem 6's derived reduction with the printed
/// reduced equation X^6 - 2X^3 n + X^2 + n^2 - 10.
struct Problem6Comparison {
  Polynomial derived;
  Polynomial printed;
  bool matches = false;
  std::vector<std::string> lines;
};
Problem6Comparison problem6_comparison(const ReductionTrace& t);

}  // namespace fawaid
