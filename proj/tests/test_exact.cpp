#include <doctest.h>

#include <random>

#include "fawaid/exact.hpp"

using namespace fawaid;

TEST_CASE("isqrt frozen values") {
  CHECK(isqrt(Integer(0)) == 0);
  CHECK(isqrt(Integer(144)) == 12);
  CHECK(isqrt(Integer(10)) == 3);
  Integer two64 = Integer(1) << 64;
  CHECK(isqrt(two64) == Integer(1) << 32);
  CHECK_THROWS_AS(isqrt(Integer(-1)), std::domain_error);
}

TEST_CASE("isqrt bracketing on random 512-bit integers") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Integer n = 0;
    int words = 1 + static_cast<int>(rng() % 8);  // up to 512 bits
    for (int w = 0; w < words; ++w) n = (n << 64) | Integer(static_cast<unsigned long>(rng()));
    Integer r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
    // Cross-check against GMP's own square root.
    Integer g;
    mpz_sqrt(g.get_mpz_t(), n.get_mpz_t());
    CHECK(r == g);
  }
}

TEST_CASE("perfect_power_root") {
  CHECK(perfect_power_root(Integer(27), 3) == Integer(3));
  CHECK(perfect_power_root(Integer(-8), 3) == Integer(-2));
  CHECK(!perfect_power_root(Integer(10), 2));
  CHECK(!perfect_power_root(Integer(-4), 2));
  CHECK(perfect_power_root(Integer(0), 5) == Integer(0));
  CHECK(perfect_power_root(Integer(1) << 60, 4) == Integer(1) << 15);
  CHECK_THROWS_AS(perfect_power_root(Integer(4), 1), std::domain_error);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Integer b(static_cast<unsigned long>(rng() % 100000));
    unsigned k = 2 + static_cast<unsigned>(rng() % 4);
    Integer p = 1;
    for (unsigned j = 0; j < k; ++j) p *= b;
    auto r = perfect_power_root(p, k);
    REQUIRE(r.has_value());
    CHECK(*r == b);
    // Cross-check against GMP's root.
    Integer g;
    mpz_root(g.get_mpz_t(), p.get_mpz_t(), k);
    CHECK(*r == g);
  }
}

TEST_CASE("rational_kth_root") {
  CHECK(rational_kth_root(make_rational(49, 4), 2) == make_rational(7, 2));
  CHECK(!rational_kth_root(Rational(10), 2));
  // 2401/144: confirm the expected value by direct multiplication.
  Rational root = make_rational(49, 12);
  CHECK(root * root == make_rational(2401, 144));
  CHECK(rational_kth_root(make_rational(2401, 144), 2) == root);
  CHECK(rational_kth_root(make_rational(-27, 8), 3) == make_rational(-3, 2));
  CHECK(rational_kth_root(make_rational(27, 9), 3) == std::nullopt);  // 27/9 reduces to 3
}

TEST_CASE("rational_kth_root exactness property") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    Rational q = make_rational(static_cast<long>(rng() % 2000) - 1000,
                               1 + static_cast<long>(rng() % 500));
    unsigned k = 2 + static_cast<unsigned>(rng() % 3);
    if (k % 2 == 0 && sgn(q) < 0) q = -q;
    auto r = rational_kth_root(q, k);
    if (r) {
      Rational p(1);
      for (unsigned j = 0; j < k; ++j) p *= *r;
      CHECK(p == q);
    }
  }
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937_64 rng(17);
  auto draw = [&] {
    return make_rational(static_cast<long>(rng() % 401) - 200, 1 + static_cast<long>(rng() % 80));
  };
  for (int i = 0; i < 300; ++i) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK(Rational((a + b) + c) == Rational(a + (b + c)));
    CHECK(Rational((a * b) * c) == Rational(a * (b * c)));
    CHECK(Rational(a * (b + c)) == Rational(a * b + a * c));
    CHECK(Rational(a + b) == Rational(b + a));
    if (a != 0) CHECK(Rational(a * (Rational(1) / a)) == Rational(1));
    CHECK(Rational(a + (-a)) == Rational(0));
  }
}

TEST_CASE("normalization idempotence") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    long a = static_cast<long>(rng() % 999) - 499;
    long b = 1 + static_cast<long>(rng() % 200);
    long k = 1 + static_cast<long>(rng() % 50);
    CHECK(make_rational(k * a, k * b) == make_rational(a, b));
  }
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(-3, -6) == make_rational(1, 2));
  CHECK(make_rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("height") {
  CHECK(height(make_rational(41, 12)) == 41);
  CHECK(height(make_rational(-41, 12)) == 41);
  CHECK(height(make_rational(5, 12)) == 12);
  CHECK(height(Rational(0)) == 1);
}

TEST_CASE("parse_rational accepts exact forms only") {
  CHECK(parse_rational("41/12") == make_rational(41, 12));
  CHECK(parse_rational("-31/12") == make_rational(-31, 12));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("2/4") == make_rational(1, 2));
  CHECK(!parse_rational("0.5"));
  CHECK(!parse_rational("1e3"));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("1/-2"));
  CHECK(!parse_rational(""));
  CHECK(!parse_rational("x"));
}

TEST_CASE("to_string canonical") {
  CHECK(to_string(make_rational(41, 12)) == "41/12");
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
}
