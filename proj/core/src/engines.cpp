#include "fawaid/engines.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "fawaid/verify.hpp"

namespace fawaid {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Assignment restrict_to_unknowns(const ProblemSpec& p, const Assignment& a) {
  Assignment out;
  for (const auto& u : p.unknowns) out.emplace(u, a.at(u));
  return out;
}

std::string join_rationals(const std::vector<Rational>& vs, size_t cap = 64) {
  std::string out;
  size_t shown = std::min(vs.size(), cap);
  for (size_t i = 0; i < shown; ++i) {
    if (i) out += ", ";
    out += to_string(vs[i]);
  }
  if (shown < vs.size()) out += ", ... (" + std::to_string(vs.size()) + " total)";
  return out;
}

void append_cubic_notes(Certificate& cert, const ReductionTrace& trace,
                        const Polynomial& stripped) {
  if (stripped.degree() != 3) return;
  auto [c, dep] = depress(stripped * (Rational(1) / stripped.leading()));
  auto cls = cubic_classify(dep.coeff(1), dep.coeff(0));
  std::ostringstream os;
  os << "cubic factor " << stripped.render(trace.variable) << ": discriminant "
     << to_string(cls.discriminant) << ", " << to_string(cls.structure);
  (void)c;
  cert.notes.push_back(os.str());
}

// Integer witnesses of is_square(x^2 + bx + c) via factor pairs of the
// completed square, plus a couple of verified rational chord points.
std::vector<Rational> square_target_candidates(const Polynomial& quad) {
  if (quad.degree() != 2 || quad.leading() != 1 || !is_integer(quad.coeff(1)) ||
      !is_integer(quad.coeff(0)) || numerator(quad.coeff(1)) % 2 != 0)
    throw EngineError("square-target decision implemented for monic integer quadratics with an even linear term");
  Rational h = -quad.coeff(1) / 2;                 // (x - h)^2 - M
  Rational M_rat = h * h - quad.coeff(0);
  Integer M = numerator(M_rat);
  std::vector<Rational> xs;
  if (M == 0) {
    xs.push_back(h);
    return xs;
  }
  Integer absM = abs(M);
  for (Integer d = 1; d * d <= absM; ++d) {
    if (absM % d != 0) continue;
    Integer e = absM / d;
    if ((e - d) % 2 != 0) continue;
    if (M > 0) {
      // (x-h-w)(x-h+w) = M with d*e = M: x = h +- (d+e)/2.
      xs.push_back(h + make_rational(d + e, Integer(2)));
      xs.push_back(h - make_rational(d + e, Integer(2)));
    } else {
      // w^2 - (x-h)^2 = -M: x = h +- (e-d)/2.
      xs.push_back(h + make_rational(e - d, Integer(2)));
      xs.push_back(h - make_rational(e - d, Integer(2)));
    }
  }
  // Rational chord points t and M/t for small t exhibit the infinite family.
  for (long t : {2, 3}) {
    Rational tr(t);
    xs.push_back(h + (tr + M_rat / tr) / 2);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

Certificate decide_product_of_cubes(const ProblemSpec& p, const Assignment& resolved) {
  Certificate cert;
  cert.problem_id = p.id;
  cert.engine = "decide.cube-root";
  cert.bindings = resolved;
  Rational a = resolved.at("a");
  auto witness = product_of_cubes(a);
  if (witness) {
    Certificate::Solution s;
    s.values = {{"x", (*witness)[0]}, {"y", (*witness)[1]}, {"z", (*witness)[2]}};
    auto report = verify_solution(p, resolved, s.values);
    if (report.overall != Verdict::Holds)
      throw EngineError("internal: cube-root witness failed verification");
    s.degenerate = is_degenerate(p, s.values);
    cert.solutions.push_back(std::move(s));
    cert.outcome = Certificate::Outcome::SolutionsFound;
    cert.notes.push_back("a = " + to_string(a) + " is the cube of " + to_string((*witness)[0]) +
                         "; any factorization of the cube root works");
  } else {
    cert.outcome = Certificate::Outcome::NoRationalSolutionsProved;
    cert.notes.push_back("x^3 y^3 z^3 = (xyz)^3, and " + to_string(a) +
                         " is not the cube of a rational (exact k-th-root test)");
  }
  return cert;
}

}  // namespace

Certificate decide_rational(const ProblemSpec& p, const Assignment& bindings,
                            const std::string& variant) {
  auto start = Clock::now();
  Assignment resolved = resolve_bindings(p, bindings);
  if (p.id == 30) {
    Certificate cert = decide_product_of_cubes(p, resolved);
    cert.elapsed_ms = ms_since(start);
    return cert;
  }
  if (!is_reducible(p.id))
    throw EngineError("problem " + std::to_string(p.id) +
                      " has no decision pipeline; run a bounded search instead");

  ReductionTrace trace = reduce_problem(p, bindings, variant);
  Certificate cert;
  cert.problem_id = p.id;
  cert.variant = variant;
  cert.bindings = resolved;
  cert.notes.push_back("reduced polynomial in " + trace.variable + ": " +
                       trace.result.render(trace.variable));
  cert.notes.push_back(trace.solution_map);

  std::vector<std::pair<Rational, Assignment>> candidates;  // (value in trace var, assignment)
  bool complete = true;

  if (trace.target == ReductionTarget::Root) {
    cert.engine = "decide.rational-roots";
    auto rr = rational_roots_report(trace.result);
    if (rr.zero_multiplicity > 0)
      cert.notes.push_back("factored out " + trace.variable +
                           (rr.zero_multiplicity > 1 ? "^" + std::to_string(rr.zero_multiplicity) : "") +
                           "; " + trace.variable + " = 0 tested as a root");
    cert.notes.push_back("candidates tested on " + rr.stripped.render(trace.variable) + ": " +
                         join_rationals(rr.candidates));
    append_cubic_notes(cert, trace, rr.stripped);
    for (const auto& r : rr.roots) {
      auto asg = trace.original_assignment_at(r);
      if (asg) candidates.emplace_back(r, *asg);
    }
  } else {
    cert.engine = "decide.factor-pairs";
    complete = false;  // integer witnesses plus sample chords, not a completeness proof
    auto xs = square_target_candidates(trace.result);
    cert.notes.push_back("factor-pair candidates for " + trace.result.render(trace.variable) +
                         " = square: " + join_rationals(xs));
    cert.notes.push_back(
        "witnesses below are exhaustive over integer factor pairs; the rational solution set is an "
        "infinite family (chord parametrization), two chord points included");
    for (const auto& r : xs) {
      auto asg = trace.original_assignment_at(r);
      if (asg) candidates.emplace_back(r, *asg);
    }
  }

  for (const auto& asg : trace.factor_candidates) {
    Assignment trimmed = trace.bindings;
    for (const auto& u : p.unknowns) trimmed[u] = asg.at(u);
    candidates.emplace_back(Rational(0), trimmed);
  }

  size_t spurious = 0;
  for (const auto& [value, asg] : candidates) {
    (void)value;
    auto report = verify_solution(p, resolved, asg, variant);
    if (report.overall != Verdict::Holds) {
      ++spurious;
      continue;
    }
    Certificate::Solution s;
    s.values = restrict_to_unknowns(p, asg);
    s.degenerate = is_degenerate(p, s.values);
    cert.solutions.push_back(std::move(s));
  }
  canonicalize_solutions(cert.solutions);
  if (spurious > 0)
    cert.notes.push_back(std::to_string(spurious) +
                         " candidate(s) were spurious (introduced by squaring) and were discarded "
                         "after exact back-substitution");

  if (!cert.solutions.empty()) {
    cert.outcome = Certificate::Outcome::SolutionsFound;
    bool all_degenerate = std::all_of(cert.solutions.begin(), cert.solutions.end(),
                                      [](const auto& s) { return s.degenerate; });
    if (all_degenerate && complete)
      cert.notes.push_back("every solution is degenerate; no nonzero rational solution exists");
  } else if (complete) {
    cert.outcome = Certificate::Outcome::NoRationalSolutionsProved;
    cert.notes.push_back(
        "no rational solutions: the rational-root decision is complete and every candidate failed "
        "exact verification");
  } else {
    cert.outcome = Certificate::Outcome::NoneBelowBound;
    cert.notes.push_back("no witness found by the incomplete factor-pair path");
  }

  if (p.id == 28) {
    auto verdict = problem28_discriminant_verdict(trace);
    cert.notes.insert(cert.notes.end(), verdict.lines.begin(), verdict.lines.end());
  }
  if (p.id == 6) {
    auto cmp = problem6_comparison(trace);
    cert.notes.insert(cert.notes.end(), cmp.lines.begin(), cmp.lines.end());
  }
  cert.elapsed_ms = ms_since(start);
  return cert;
}

// --- number-theory engines --------------------------------------------------

std::vector<CongruumWitness> congruum_triples(const Integer& n, const Integer& k_bound,
                                              unsigned /*threads*/) {
  if (n < 1 || k_bound < 1) throw EngineError("congruum_triples needs n >= 1 and k_bound >= 1");
  std::vector<CongruumWitness> out;
  for (Integer k = 1; k <= k_bound; ++k) {
    Integer N = n * k * k;
    for (Integer d = 1; d * d <= N; ++d) {
      if (N % d != 0) continue;
      Integer e = N / d;
      if (d == e || (e - d) % 2 != 0) continue;
      Integer s = (d + e) / 2, r = (e - d) / 2;
      Integer t2 = s * s + N;
      Integer t = isqrt(t2);
      if (t * t != t2) continue;
      if (gcd(s, k) != 1) continue;  // the reduced witness appeared at k/gcd
      CongruumWitness w{r, s, t, k, make_rational(s, k)};
      // Soundness: x^2 +- n must both be rational squares.
      Rational x2 = w.x * w.x;
      if (!is_square(x2 + Rational(n)) || !is_square(x2 - Rational(n)))
        throw EngineError("internal: congruum witness failed verification");
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end(), [](const CongruumWitness& a, const CongruumWitness& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.s < b.s;
  });
  return out;
}

Certificate congruum_search(const Integer& n, const Integer& k_bound, unsigned threads) {
  auto start = Clock::now();
  Certificate cert;
  cert.problem_id = 18;
  cert.engine = "search.congruum";
  cert.bindings = {{"n", Rational(n)}};
  cert.bound = Certificate::Bound{"k-bound", k_bound};
  auto witnesses = congruum_triples(n, k_bound, threads);
  for (const auto& w : witnesses) {
    Certificate::Solution s;
    s.values = {{"x", w.x}};
    s.degenerate = w.x == 0;
    cert.solutions.push_back(std::move(s));
    std::ostringstream os;
    os << "squares in arithmetic progression: (" << to_string(w.r) << ", " << to_string(w.s)
       << ", " << to_string(w.t) << ") with k = " << to_string(w.k) << ": " << to_string(w.s)
       << "^2 - " << to_string(w.r) << "^2 = " << to_string(w.t) << "^2 - " << to_string(w.s)
       << "^2 = " << to_string(n) << "*" << to_string(w.k) << "^2";
    cert.notes.push_back(os.str());
  }
  canonicalize_solutions(cert.solutions);
  cert.outcome = cert.solutions.empty() ? Certificate::Outcome::NoneBelowBound
                                        : Certificate::Outcome::SolutionsFound;
  if (cert.solutions.empty())
    cert.notes.push_back("exhaustive over denominators k <= " + to_string(k_bound) +
                         ": no three squares in arithmetic progression with difference " +
                         to_string(n) + "k^2");
  cert.elapsed_ms = ms_since(start);
  return cert;
}

std::vector<std::array<Integer, 3>> euclid_triples(const Integer& limit) {
  std::vector<std::array<Integer, 3>> out;
  for (Integer m = 2; m * m + 1 <= limit; ++m) {
    for (Integer n = 1 + m % 2; n < m; n += 2) {
      if (gcd(m, n) != 1) continue;
      Integer c = m * m + n * n;
      if (c > limit) break;
      out.push_back({m * m - n * n, 2 * m * n, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a[2] != b[2]) return a[2] < b[2];
    return a[0] < b[0];
  });
  return out;
}

std::vector<std::pair<Integer, Integer>> sum_two_cubes(const Integer& n, const Integer& bound) {
  std::vector<std::pair<Integer, Integer>> out;
  for (Integer x = 0; x <= bound && x * x * x <= n; ++x) {
    Integer rest = n - x * x * x;
    auto y = perfect_power_root(rest, 3);
    if (!y || *y < x || *y > bound) continue;
    out.emplace_back(x, *y);
  }
  return out;
}

std::vector<std::pair<Integer, Integer>> cube_plus_square(const Integer& n, const Integer& bound) {
  std::vector<std::pair<Integer, Integer>> out;
  for (Integer x = 0; x <= bound && x * x * x <= n; ++x) {
    Integer rest = n - x * x * x;
    Integer y = isqrt(rest);
    if (y * y != rest) continue;
    out.emplace_back(x, y);
  }
  return out;
}

std::optional<std::array<Rational, 3>> product_of_cubes(const Rational& a) {
  auto c = rational_kth_root(a, 3);
  if (!c) return std::nullopt;
  return std::array<Rational, 3>{*c, Rational(1), Rational(1)};
}

std::optional<Rational> salary_problem(const Rational& a) {
  if (sgn(a) <= 0) throw EngineError("salary_problem needs a > 0");
  auto x = rational_kth_root(Rational(900) * a * a, 3);
  if (!x) return std::nullopt;
  // Re-evaluate the original relation: (x/30) sqrt(x) = a.
  auto sq = rational_kth_root(*x, 2);
  if (!sq || *x / 30 * *sq != a) return std::nullopt;
  return x;
}

// --- per-problem report hooks -----------------------------------------------

namespace {
std::optional<Rational> shift_of(const ReductionTrace& t) {
  for (const auto& [name, expr] : t.definitions) {
    (void)name;
    if (expr->kind() == Expr::Kind::Sub && expr->lhs()->kind() == Expr::Kind::Variable &&
        expr->lhs()->name() == t.variable && expr->rhs()->kind() == Expr::Kind::Constant)
      return expr->rhs()->value();
  }
  return std::nullopt;
}
}  // namespace

DiscriminantVerdict problem28_discriminant_verdict(const ReductionTrace& t) {
  if (t.problem_id != 28 || t.result.degree() != 3)
    throw EngineError("discriminant verdict expects problem 28's reduced cubic");
  DiscriminantVerdict v;
  v.cubic = t.result;
  Rational pc = t.result.coeff(1) / t.result.leading();
  Rational qc = t.result.coeff(0) / t.result.leading();
  v.classification = cubic_classify(pc, qc);
  int sign = sgn(v.classification.discriminant);
  v.claim_confirmed = sign < 0;

  std::ostringstream head;
  head << "discriminant of " << t.result.render(t.variable) << ": D = -4*(" << to_string(pc)
       << ")^3 - 27*(" << to_string(qc) << ")^2 = " << to_string(v.classification.discriminant);
  v.lines.push_back(head.str());
  std::ostringstream sgnline;
  sgnline << "D is " << (sign > 0 ? "positive" : sign < 0 ? "negative" : "zero") << ": "
          << to_string(v.classification.structure);
  v.lines.push_back(sgnline.str());
  v.lines.push_back(std::string("source claim 'the discriminant is negative, implying that all "
                                "solutions are complex': ") +
                    (v.claim_confirmed ? "CONFIRMS" : "REFUTES"));
  if (!v.claim_confirmed && sign > 0)
    v.lines.push_back(
        "the cubic has three real irrational roots; the conclusion that no rational solution "
        "exists still stands, by the exhausted rational-root candidates");

  if (auto c = shift_of(t)) {
    Polynomial pre = t.result.compose_shift(-*c);  // undo X = x + c
    Polynomial quartic = Polynomial::x() * pre;
    v.lines.push_back("quartic before factoring: " + quartic.render("x"));
    auto [dc, dep] = depress(quartic);
    std::ostringstream fer;
    fer << "Ferrari on the depressed quartic " << dep.render("u") << " (u = x + " << to_string(dc)
        << "): resolvent " << ferrari_resolvent(dep).render("t");
    v.lines.push_back(fer.str());
    auto split = ferrari_split(dep);
    if (split)
      v.lines.push_back("resolvent gives a rational split: (" + split->first.render("u") + ")(" +
                        split->second.render("u") + ")");
    else
      v.lines.push_back(
          "no resolvent root yields a rational quadratic split; the quartic has no factorization "
          "into rational quadratics along this path");
  }
  return v;
}

Problem6Comparison problem6_comparison(const ReductionTrace& t) {
  if (t.problem_id != 6) throw EngineError("problem 6 comparison expects problem 6's trace");
  Problem6Comparison cmp;
  cmp.derived = t.result;
  Rational n = t.bindings.at("n");
  cmp.printed = Polynomial({n * n - 10, 0, Rational(1), Rational(-2) * n, 0, 0, Rational(1)});
  // Compare up to a constant factor: both sides describe "= 0".
  Polynomial scaled_printed = cmp.printed.primitive();
  cmp.matches = scaled_printed == t.result;
  cmp.lines.push_back("derived reduction (from squaring (n - X^3)^2 = (10 - X^2)^3): " +
                      cmp.derived.render("X") + " = 0");
  cmp.lines.push_back("printed reduced equation: " + cmp.printed.render("X") + " = 0");
  cmp.lines.push_back(cmp.matches
                          ? "the printed equation MATCHES the derived reduction"
                          : "MISMATCH: the printed equation does not follow from squaring the "
                            "system; the derived polynomial is authoritative here");
  return cmp;
}

}  // namespace fawaid
