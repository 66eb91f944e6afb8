#include <doctest.h>

#include <random>
#include <set>

#include "fawaid/polynomial.hpp"

using namespace fawaid;

namespace {
std::mt19937_64 rng(31);
Rational small_rational() {
  return make_rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6));
}
Polynomial random_poly(int max_deg) {
  int d = static_cast<int>(rng() % (max_deg + 1));
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.push_back(small_rational());
  return Polynomial(std::move(c));
}
}  // namespace

TEST_CASE("arithmetic basics") {
  Polynomial xp1 = Polynomial::from_ints({1, 1});
  Polynomial xm1 = Polynomial::from_ints({-1, 1});
  CHECK((xp1 * xm1) == Polynomial::from_ints({-1, 0, 1}));  // x^2 - 1
  Polynomial p = random_poly(5);
  CHECK((p + Polynomial::zero()) == p);
  Polynomial x2 = Polynomial::from_ints({0, 0, 1});
  CHECK((x2 - x2).is_zero());
  // deg(p*q) = deg p + deg q for nonzero p, q.
  for (int i = 0; i < 200; ++i) {
    Polynomial a = random_poly(4), b = random_poly(4);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("evaluation by Horner") {
  Polynomial p = Polynomial::from_ints({2098, -603, 0, 1});  // X^3 - 603X + 2098
  CHECK(p(Rational(2)) == Rational(900));
  CHECK(p(Rational(0)) == Rational(2098));
  CHECK(p(make_rational(1, 2)) == make_rational(1, 8) - make_rational(603, 2) + 2098);
}

TEST_CASE("compose_shift golden: problem 28 cubic") {
  // q(X) = p(X - 2) carries x^3 + 6x^2 - 591x + 900 to X^3 - 603X + 2098.
  Polynomial p = Polynomial::from_ints({900, -591, 6, 1});
  Polynomial q = p.compose_shift(Rational(2));
  CHECK(q == Polynomial::from_ints({2098, -603, 0, 1}));
  CHECK(q.render("X") == "X^3 - 603X + 2098");

  Polynomial sq = Polynomial::from_ints({0, 0, 1});
  CHECK(sq.compose_shift(Rational(1)) == Polynomial::from_ints({1, -2, 1}));
  CHECK(sq.compose_shift(Rational(0)) == sq);
}

TEST_CASE("compose_shift round trip on random polynomials") {
  for (int i = 0; i < 300; ++i) {
    Polynomial p = random_poly(8);
    Rational c = small_rational();
    CHECK(p.compose_shift(c).compose_shift(-c) == p);
    // q(x + c) = p(x) pointwise.
    Rational at = small_rational();
    CHECK(p.compose_shift(c)(at + c) == p(at));
  }
}

TEST_CASE("rational_roots frozen examples") {
  auto rr = rational_roots(Polynomial::from_ints({-1, 0, 1}));
  CHECK(rr == std::vector<Rational>{Rational(-1), Rational(1)});

  // x^3 - 3x^2 + 2x - 1: candidates are only +-1; both evaluate nonzero.
  Polynomial c = Polynomial::from_ints({-1, 2, -3, 1});
  CHECK(c(Rational(1)) == Rational(-1));
  CHECK(c(Rational(-1)) == Rational(-7));
  auto report = rational_roots_report(c);
  CHECK(report.roots.empty());
  CHECK(report.candidates == std::vector<Rational>{Rational(-1), Rational(1)});

  // X^3 - 603X + 2098: candidates +-{1, 2, 1049, 2098}, all fail exactly.
  Polynomial k = Polynomial::from_ints({2098, -603, 0, 1});
  auto kr = rational_roots_report(k);
  CHECK(kr.roots.empty());
  std::vector<Rational> expected{Rational(-2098), Rational(-1049), Rational(-2), Rational(-1),
                                 Rational(1),     Rational(2),     Rational(1049), Rational(2098)};
  CHECK(kr.candidates == expected);
  for (const auto& cand : kr.candidates) CHECK(k(cand) != 0);

  CHECK(rational_roots(Polynomial::from_ints({-3, 2})) == std::vector<Rational>{make_rational(3, 2)});
  CHECK_THROWS_AS(rational_roots(Polynomial::zero()), std::invalid_argument);

  // Zero roots come from the factored power of x.
  auto zr = rational_roots_report(Polynomial::from_ints({0, 0, -1, 1}));  // x^2(x - 1)
  CHECK(zr.zero_multiplicity == 2);
  CHECK(zr.roots == std::vector<Rational>{Rational(0), Rational(1)});
}

TEST_CASE("rational_roots recovers planted roots") {
  for (int i = 0; i < 300; ++i) {
    int k = 1 + static_cast<int>(rng() % 4);
    std::set<Rational> planted;
    Polynomial p = Polynomial::constant(Rational(1 + static_cast<long>(rng() % 3)));
    for (int j = 0; j < k; ++j) {
      Rational r = make_rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4));
      planted.insert(r);
      // factor (q x - p) for root p/q
      p = p * Polynomial({-r, Rational(1)});
    }
    auto roots = rational_roots(p);
    std::set<Rational> found(roots.begin(), roots.end());
    CHECK(found == planted);
    for (const auto& r : roots) CHECK(p(r) == 0);
  }
}

TEST_CASE("primitive form") {
  Polynomial p({make_rational(-1, 9), make_rational(-2, 3), make_rational(197, 3),
                Rational(-100), Rational(0)});
  // -x^3/9 - 2x^2/3 + 197x/3 - 100 ... times -9 gives x^3 + 6x^2 - 591x + 900.
  Polynomial expect = Polynomial::from_ints({900, -591, 6, 1});
  // Note the coefficients above are ordered constant-first.
  Polynomial q({Rational(-100), make_rational(197, 3), make_rational(-2, 3), make_rational(-1, 9)});
  CHECK(q.primitive() == expect);
  CHECK(Polynomial::from_ints({2, 4, 6}).primitive() == Polynomial::from_ints({1, 2, 3}));
  CHECK(Polynomial::from_ints({-2, -4}).primitive() == Polynomial::from_ints({1, 2}));
}

TEST_CASE("cubic_classify") {
  auto c0 = cubic_classify(Rational(0), Rational(0));
  CHECK(c0.discriminant == 0);
  CHECK(c0.structure == CubicClassification::Structure::RepeatedRoot);

  auto c1 = cubic_classify(Rational(-1), Rational(0));
  CHECK(c1.discriminant == Rational(4));
  CHECK(c1.structure == CubicClassification::Structure::ThreeDistinctReal);

  // Problem 28's depressed cubic: computed with plain integer arithmetic,
  // -4*(-603)^3 = 877024908 and 27*2098^2 = 118843308.
  auto c2 = cubic_classify(Rational(-603), Rational(2098));
  CHECK(c2.discriminant == Rational(877024908) - Rational(118843308));
  CHECK(c2.discriminant == Rational(758181600));
  CHECK(c2.structure == CubicClassification::Structure::ThreeDistinctReal);

  // A cubic with one real root, e.g. x^3 + x + 1.
  auto c3 = cubic_classify(Rational(1), Rational(1));
  CHECK(c3.structure == CubicClassification::Structure::OneRealConjugatePair);
}

TEST_CASE("cubic_classify agrees with rational_roots on planted cubics") {
  auto classify_of = [](const Polynomial& p) {
    auto [c, dep] = depress(p * (Rational(1) / p.leading()));
    (void)c;
    return cubic_classify(dep.coeff(1), dep.coeff(0));
  };
  for (int i = 0; i < 200; ++i) {
    Rational a = small_rational(), b = small_rational(), c = small_rational();
    // Three rational linear factors.
    Polynomial p = Polynomial({-a, Rational(1)}) * Polynomial({-b, Rational(1)}) *
                   Polynomial({-c, Rational(1)});
    auto cls = classify_of(p);
    std::set<Rational> distinct{a, b, c};
    if (distinct.size() == 3) {
      CHECK(cls.structure == CubicClassification::Structure::ThreeDistinctReal);
      CHECK(rational_roots(p).size() == 3);
    } else {
      CHECK(cls.structure == CubicClassification::Structure::RepeatedRoot);
      CHECK(cls.discriminant == 0);
    }
  }
  // One rational root times an irreducible quadratic with complex roots.
  for (int i = 0; i < 100; ++i) {
    Rational a = small_rational();
    Rational u = small_rational(), v = small_rational();
    // x^2 + ux + v with u^2 - 4v < 0
    Rational disc = u * u - Rational(4) * v;
    if (sgn(disc) >= 0) continue;
    Polynomial p = Polynomial({-a, Rational(1)}) * Polynomial({v, u, Rational(1)});
    auto cls = classify_of(p);
    CHECK(cls.structure == CubicClassification::Structure::OneRealConjugatePair);
    CHECK(rational_roots(p) == std::vector<Rational>{a});
  }
}

TEST_CASE("depress removes the subleading term") {
  Polynomial p = Polynomial::from_ints({900, -591, 6, 1});
  auto [c, dep] = depress(p);
  CHECK(c == Rational(2));
  CHECK(dep.coeff(2) == 0);
  CHECK(dep == Polynomial::from_ints({2098, -603, 0, 1}));
  for (int i = 0; i < 100; ++i) {
    Polynomial q = random_poly(6);
    if (q.degree() < 2) continue;
    auto [s, d] = depress(q);
    (void)s;
    CHECK(d.coeff(d.degree() - 1) == 0);
    CHECK(d.degree() == q.degree());
  }
}

TEST_CASE("discriminant closed forms") {
  CHECK(discriminant(Polynomial::from_ints({-4, 0, 1})) == Rational(16));  // x^2 - 4
  CHECK(discriminant(Polynomial::from_ints({2098, -603, 0, 1})) == Rational(758181600));
  // Quadratic/quartic sanity: (x^2-1)(x^2-4) has 4 distinct roots, disc != 0.
  Polynomial q = Polynomial::from_ints({4, 0, -5, 0, 1});
  CHECK(discriminant(q) != 0);
  CHECK_THROWS_AS(discriminant(Polynomial::from_ints({1, 1})), std::invalid_argument);
}

TEST_CASE("ferrari resolvent and split") {
  // x^4 - 5x^2 + 4 factors as (x^2 - 1)(x^2 - 4): roots +-1, +-2.
  Polynomial biq = Polynomial::from_ints({4, 0, -5, 0, 1});
  Polynomial res = ferrari_resolvent(biq);
  // t^3 + 2pt^2 + (p^2-4r)t - q^2 with p=-5, q=0, r=4: t^3 - 10t^2 + 9t.
  CHECK(res == Polynomial::from_ints({0, 9, -10, 1}));
  auto split = ferrari_split(biq);
  REQUIRE(split.has_value());
  std::set<Rational> roots;
  for (const auto& quad : {split->first, split->second})
    for (const auto& r : rational_roots(quad)) roots.insert(r);
  CHECK(roots == std::set<Rational>{Rational(-2), Rational(-1), Rational(1), Rational(2)});

  // x^4 + 1: no rational resolvent root gives a split.
  Polynomial x41 = Polynomial::from_ints({1, 0, 0, 0, 1});
  auto no = ferrari_split(x41);
  CHECK(!no.has_value());
  auto res2 = rational_roots(ferrari_resolvent(x41));
  for (const auto& t : res2) {
    // roots of t^3 - 4t are 0, +-2; none yields rational quadratics
    CHECK((t == 0 || t == 2 || t == -2));
  }

  // x^4: degenerate, resolvent t^3 with the repeated root 0.
  Polynomial x4 = Polynomial::from_ints({0, 0, 0, 0, 1});
  CHECK(ferrari_resolvent(x4) == Polynomial::from_ints({0, 0, 0, 1}));
  CHECK(rational_roots(ferrari_resolvent(x4)) == std::vector<Rational>{Rational(0)});

  CHECK_THROWS_AS(ferrari_resolvent(Polynomial::from_ints({1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(ferrari_resolvent(Polynomial::from_ints({1, 1, 0, 1, 1})),
                  std::invalid_argument);
}

TEST_CASE("ferrari split reproduces random factorable quartics") {
  for (int i = 0; i < 100; ++i) {
    // Build (x^2 + a x + b)(x^2 - a x + c) which is already depressed.
    Rational a = small_rational(), b = small_rational(), c = small_rational();
    Polynomial f = Polynomial({b, a, Rational(1)}) * Polynomial({c, -a, Rational(1)});
    auto split = ferrari_split(f);
    REQUIRE(split.has_value());
    CHECK(split->first * split->second == f);
  }
}

TEST_CASE("render") {
  CHECK(Polynomial::from_ints({-1, 2, -3, 0, 0, 0, 1}).render("x") == "x^6 - 3x^2 + 2x - 1");
  CHECK(Polynomial::from_ints({0}).render() == "0");
  CHECK(Polynomial::zero().render() == "0");
  CHECK(Polynomial({make_rational(3, 2), Rational(1)}).render() == "x + (3/2)");
  CHECK(Polynomial::from_ints({2098, -603, 0, 1}).render("X") == "X^3 - 603X + 2098");
  CHECK(Polynomial::from_ints({0, -1, 0, 0, 2, -3, 1}).render("x") ==
        "x^6 - 3x^5 + 2x^4 - x");
}

TEST_CASE("divmod and gcd") {
  Polynomial a = Polynomial::from_ints({-1, 0, 1});     // x^2 - 1
  Polynomial b = Polynomial::from_ints({1, 1});         // x + 1
  auto [q, r] = divmod(a, b);
  CHECK(q == Polynomial::from_ints({-1, 1}));
  CHECK(r.is_zero());
  CHECK(poly_gcd(a, b) == Polynomial::from_ints({1, 1}));
  CHECK_THROWS_AS(divmod(a, Polynomial::zero()), std::invalid_argument);
}
