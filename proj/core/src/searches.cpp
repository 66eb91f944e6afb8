#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <thread>

#include "fawaid/engines.hpp"
#include "fawaid/verify.hpp"

namespace fawaid {

namespace {

using Clock = std::chrono::steady_clock;
using Solutions = std::vector<Certificate::Solution>;

long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::uint64_t u64_isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

bool u64_is_square(std::uint64_t n) {
  std::uint64_t r = u64_isqrt(n);
  return r * r == n;
}

/// Splits [lo, hi] into contiguous stripes of the leading coordinate, runs
/// them on worker threads, and concatenates stripe results in stripe order,
/// so the output is independent of the thread count.
Solutions run_stripes(const Integer& lo, const Integer& hi, unsigned threads,
                      const std::function<Solutions(const Integer&, const Integer&)>& fn) {
  if (hi < lo) return {};
  if (threads == 0) threads = 1;
  Integer total = hi - lo + 1;
  if (total < threads) threads = static_cast<unsigned>(total.get_ui());
  if (threads <= 1) return fn(lo, hi);
  Integer stripe = (total + threads - 1) / threads;
  std::vector<Solutions> partial(threads);
  std::vector<std::thread> workers;
  for (unsigned i = 0; i < threads; ++i) {
    Integer first = lo + stripe * i;
    Integer last = first + stripe - 1;
    if (last > hi) last = hi;
    if (first > hi) break;
    workers.emplace_back([&, i, first, last] { partial[i] = fn(first, last); });
  }
  for (auto& w : workers) w.join();
  Solutions out;
  for (auto& part : partial)
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  return out;
}

Certificate::Solution make_solution(std::initializer_list<std::pair<const char*, Rational>> vals) {
  Certificate::Solution s;
  for (const auto& [k, v] : vals) s.values.emplace(k, v);
  return s;
}

// --- integer-search kernels --------------------------------------------------

// Problem 1: x^2 + y^2 and x^2 - y^2 both squares, x, y >= 1.
Solutions kernel_p1(const Integer& bound, unsigned threads) {
  bool small = bound <= Integer(2000000000);
  return run_stripes(1, bound, threads, [&](const Integer& first, const Integer& last) {
    Solutions out;
    if (small) {
      std::uint64_t b = bound.get_ui();
      for (std::uint64_t x = first.get_ui(); x <= last.get_ui(); ++x) {
        std::uint64_t x2 = x * x;
        for (std::uint64_t y = 1; y <= b && y <= x; ++y) {
          std::uint64_t y2 = y * y;
          if (u64_is_square(x2 + y2) && u64_is_square(x2 - y2))
            out.push_back(make_solution({{"x", Rational(static_cast<unsigned long>(x))},
                                         {"y", Rational(static_cast<unsigned long>(y))}}));
        }
      }
    } else {
      for (Integer x = first; x <= last; ++x) {
        Integer x2 = x * x;
        for (Integer y = 1; y <= x; ++y) {
          Integer s = x2 + y * y, d = x2 - y * y;
          Integer rs = isqrt(s);
          if (rs * rs != s) continue;
          Integer rd = isqrt(d);
          if (rd * rd == d)
            out.push_back(make_solution({{"x", Rational(x)}, {"y", Rational(y)}}));
        }
      }
    }
    return out;
  });
}

// Problem 3: legs x^2, y^2 with x, y >= 1 up to the bound; z solved exactly.
Solutions kernel_p3(const Integer& bound, unsigned threads) {
  return run_stripes(1, bound, threads, [&](const Integer& first, const Integer& last) {
    Solutions out;
    for (Integer x = first; x <= last; ++x) {
      Integer x4 = x * x * x * x;
      for (Integer y = 1; y <= bound; ++y) {
        Integer s = x4 + y * y * y * y;
        auto z = perfect_power_root(s, 4);
        if (z) out.push_back(make_solution({{"x", Rational(x)}, {"y", Rational(y)}, {"z", Rational(*z)}}));
      }
    }
    return out;
  });
}

// Problem 12: x^3 + 1 = y^3 with x in 0..bound, y solved exactly.
Solutions kernel_p12(const Integer& bound, unsigned threads) {
  return run_stripes(0, bound, threads, [&](const Integer& first, const Integer& last) {
    Solutions out;
    for (Integer x = first; x <= last; ++x) {
      auto y = perfect_power_root(x * x * x + 1, 3);
      if (y) out.push_back(make_solution({{"x", Rational(x)}, {"y", Rational(*y)}}));
    }
    return out;
  });
}

// Problem 16: x^2 - 10x - 10 a perfect square, x in 0..bound.
Solutions kernel_p16(const Integer& bound, unsigned threads) {
  return run_stripes(0, bound, threads, [&](const Integer& first, const Integer& last) {
    Solutions out;
    for (Integer x = first; x <= last; ++x) {
      Integer v = x * x - 10 * x - 10;
      if (v < 0) continue;
      Integer r = isqrt(v);
      if (r * r == v) out.push_back(make_solution({{"x", Rational(x)}}));
    }
    return out;
  });
}

Solutions kernel_p26(const Integer& n, const Integer& bound, unsigned threads) {
  return run_stripes(0, bound, threads, [&](const Integer& first, const Integer& last) {
    Solutions out;
    for (const auto& [x, y] : cube_plus_square(n, last))
      if (x >= first) out.push_back(make_solution({{"x", Rational(x)}, {"y", Rational(y)}}));
    return out;
  });
}

Solutions kernel_p27(const Integer& n, const Integer& bound, unsigned threads) {
  return run_stripes(0, bound, threads, [&](const Integer& first, const Integer& last) {
    Solutions out;
    for (Integer x = first; x <= last && x * x * x <= n; ++x) {
      auto y = perfect_power_root(n - x * x * x, 3);
      if (y && *y >= x && *y <= bound)
        out.push_back(make_solution({{"x", Rational(x)}, {"y", Rational(*y)}}));
    }
    return out;
  });
}

// Generic fallback: enumerate every unknown over [lo, bound] and test the
// relations by exact evaluation.
Solutions generic_integer_search(const ProblemSpec& p, const Assignment& resolved,
                                 const std::string& variant, const Integer& lo,
                                 const Integer& bound, unsigned threads) {
  const auto& rels = p.relations_for(variant);
  const auto& names = p.unknowns;
  return run_stripes(lo, bound, threads, [&](const Integer& first, const Integer& last) {
    Solutions out;
    Assignment a = resolved;
    std::vector<Integer> point(names.size(), lo);
    std::function<void(size_t)> rec = [&](size_t idx) {
      if (idx == names.size()) {
        for (size_t i = 0; i < names.size(); ++i) a[names[i]] = Rational(point[i]);
        if (check_relations(rels, a).overall == Verdict::Holds) {
          Certificate::Solution s;
          for (size_t i = 0; i < names.size(); ++i) s.values[names[i]] = Rational(point[i]);
          out.push_back(std::move(s));
        }
        return;
      }
      Integer from = idx == 0 ? first : lo;
      Integer to = idx == 0 ? last : bound;
      for (Integer v = from; v <= to; ++v) {
        point[idx] = v;
        rec(idx + 1);
      }
    };
    rec(0);
    return out;
  });
}

// Reduced nonnegative fractions of height <= h, ascending.
std::vector<Rational> rationals_of_height(const Integer& h) {
  std::vector<Rational> out;
  for (Integer den = 1; den <= h; ++den)
    for (Integer num = 0; num <= h; ++num) {
      if (num > 0 && gcd(num, den) != 1) continue;
      if (num == 0 && den != 1) continue;
      out.push_back(make_rational(num, den));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Certificate search_integer(const ProblemSpec& p, const Assignment& bindings, const Integer& bound,
                           unsigned threads, const std::string& variant) {
  auto start = Clock::now();
  if (bound < 1) throw EngineError("search bound must be positive");
  if (p.classification == Classification::Missing)
    throw EngineError("problem " + std::to_string(p.id) + " has no statement to search");
  Assignment resolved = resolve_bindings(p, bindings);

  Certificate cert;
  cert.problem_id = p.id;
  cert.engine = "search.integer";
  cert.variant = variant;
  cert.bindings = resolved;
  cert.bound = Certificate::Bound{"integer-bound", bound};

  Solutions raw;
  switch (p.id) {
    case 1:
      raw = kernel_p1(bound, threads);
      cert.notes.push_back("x, y range over 1..B; y = 0 satisfies both conditions trivially and "
                           "pairs with y > x fail because x^2 - y^2 < 0");
      break;
    case 3:
      raw = kernel_p3(bound, threads);
      cert.notes.push_back("legs' roots x, y range over 1..B; z is solved exactly as the fourth "
                           "root of x^4 + y^4, so the certificate is exhaustive in x and y");
      break;
    case 12:
      raw = kernel_p12(bound, threads);
      cert.notes.push_back("x ranges over 0..B; y is solved exactly as the cube root of x^3 + 1");
      break;
    case 16:
      raw = kernel_p16(bound, threads);
      cert.notes.push_back("x ranges over 0..B (the prose form x^2 - 10x - 10 is tested)");
      break;
    case 26:
      raw = kernel_p26(numerator(resolved.at("n")), bound, threads);
      cert.notes.push_back("x ranges over 0..min(B, cbrt(n)); y is solved exactly");
      break;
    case 27:
      raw = kernel_p27(numerator(resolved.at("n")), bound, threads);
      cert.notes.push_back("x ranges over 0..B with x <= y <= B; y is solved exactly");
      break;
    default: {
      bool positive_domain = p.id == 2 || p.id == 8;
      Integer lo = positive_domain ? 1 : 0;
      raw = generic_integer_search(p, resolved, variant, lo, bound, threads);
      cert.notes.push_back(std::string("all unknowns range over ") +
                           (positive_domain ? "1" : "0") + "..B; relations tested exactly at "
                           "every point");
      break;
    }
  }
  for (auto& s : raw) {
    auto report = verify_solution(p, resolved, s.values, variant);
    if (report.overall != Verdict::Holds)
      throw EngineError("internal: search produced an unverified solution");
    s.degenerate = is_degenerate(p, s.values);
    cert.solutions.push_back(std::move(s));
  }
  canonicalize_solutions(cert.solutions);
  cert.outcome = cert.solutions.empty() ? Certificate::Outcome::NoneBelowBound
                                        : Certificate::Outcome::SolutionsFound;
  cert.elapsed_ms = ms_since(start);
  return cert;
}

Certificate search_rational(const ProblemSpec& p, const Assignment& bindings,
                            const Integer& height, unsigned threads, const std::string& variant) {
  auto start = Clock::now();
  if (height < 1) throw EngineError("height bound must be positive");
  if (p.classification == Classification::Missing)
    throw EngineError("problem " + std::to_string(p.id) + " has no statement to search");
  Assignment resolved = resolve_bindings(p, bindings);

  Certificate cert;
  cert.problem_id = p.id;
  cert.variant = variant;
  cert.bindings = resolved;

  if (p.id == 18) {
    // Congruum route: the height is read as a denominator bound, which covers
    // every reduced fraction of that height and more.
    cert.engine = "search.congruum";
    cert.bound = Certificate::Bound{"denominator-bound", height};
    Rational n = resolved.at("n");
    if (!is_integer(n) || sgn(n) <= 0)
      throw EngineError("the congruum engine needs a positive integer n");
    auto witnesses = congruum_triples(numerator(n), height, threads);
    for (const auto& w : witnesses) {
      Certificate::Solution s;
      s.values = {{"x", w.x}};
      s.degenerate = w.x == 0;
      cert.solutions.push_back(std::move(s));
      std::ostringstream os;
      os << "witness squares (" << to_string(w.r) << "^2, " << to_string(w.s) << "^2, "
         << to_string(w.t) << "^2) in arithmetic progression with difference " << to_string(n)
         << "*" << to_string(w.k) << "^2";
      cert.notes.push_back(os.str());
    }
    cert.notes.push_back(
        "exhaustive over all rational x with denominator <= " + to_string(height) +
        " (a superset of the height-" + to_string(height) + " ball): x = s/k solves the problem "
        "iff (s^2 - nk^2, s^2, s^2 + nk^2) are squares in arithmetic progression");
  } else {
    cert.engine = "search.rational";
    cert.bound = Certificate::Bound{"height", height};
    auto xs = rationals_of_height(height);
    const auto& rels = p.relations_for(variant);

    if (p.id == 11) {
      // x enumerated; y = sqrt(10 - x^2) solved exactly.
      for (const auto& x : xs) {
        Rational rest = Rational(10) - x * x;
        if (sgn(rest) < 0) continue;
        auto y = rational_kth_root(rest, 2);
        if (!y) continue;
        Assignment a = resolved;
        a["x"] = x;
        a["y"] = *y;
        if (check_relations(rels, a).overall == Verdict::Holds)
          cert.solutions.push_back({{{"x", x}, {"y", *y}}, false});
      }
      cert.notes.push_back("x enumerated over nonnegative rationals of height <= H; y solved "
                           "exactly as sqrt(10 - x^2)");
    } else if (p.id == 13 || p.id == 14) {
      // Scale-invariant in x : y; coprime integer pairs cover every ratio.
      for (Integer a = 1; a <= height; ++a)
        for (Integer b = 1; b <= height; ++b) {
          if (gcd(a, b) != 1) continue;
          Assignment asg = resolved;
          asg["x"] = Rational(a);
          asg["y"] = Rational(b);
          if (check_relations(rels, asg).overall == Verdict::Holds)
            cert.solutions.push_back({{{"x", Rational(a)}, {"y", Rational(b)}}, false});
        }
      cert.notes.push_back("the condition depends only on the ratio x : y; coprime integer pairs "
                           "up to H cover every rational ratio of height <= H");
    } else if (p.unknowns.size() == 1) {
      const std::string& name = p.unknowns[0];
      for (const auto& x : xs) {
        Assignment a = resolved;
        a[name] = x;
        if (check_relations(rels, a).overall == Verdict::Holds)
          cert.solutions.push_back({{{name, x}}, false});
      }
      cert.notes.push_back(name + " enumerated over nonnegative reduced fractions of height <= H");
    } else if (p.unknowns.size() == 2) {
      for (const auto& x : xs)
        for (const auto& y : xs) {
          Assignment a = resolved;
          a[p.unknowns[0]] = x;
          a[p.unknowns[1]] = y;
          if (check_relations(rels, a).overall == Verdict::Holds) {
            Certificate::Solution s;
            s.values = {{p.unknowns[0], x}, {p.unknowns[1], y}};
            cert.solutions.push_back(std::move(s));
          }
        }
      cert.notes.push_back(
          "both unknowns enumerated over nonnegative reduced fractions of height <= H");
    } else {
      throw EngineError("rational search over " + std::to_string(p.unknowns.size()) +
                        " unknowns is not supported; use an integer search (--bound)");
    }
  }

  for (auto& s : cert.solutions) {
    auto report = verify_solution(p, resolved, s.values, variant);
    if (report.overall != Verdict::Holds)
      throw EngineError("internal: search produced an unverified solution");
    s.degenerate = is_degenerate(p, s.values);
  }
  canonicalize_solutions(cert.solutions);
  cert.outcome = cert.solutions.empty() ? Certificate::Outcome::NoneBelowBound
                                        : Certificate::Outcome::SolutionsFound;
  cert.elapsed_ms = ms_since(start);
  return cert;
}

}  // namespace fawaid
