#include "fawaid/exact.hpp"

#include <cctype>

namespace fawaid {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  if (n == 0) return 0;
  // Initial guess 2^ceil(bits/2) >= sqrt(n); the iteration is monotonically
  // decreasing from above, so the first non-decrease is the floor.
  size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer x = Integer(1) << ((bits + 1) / 2);
  Integer prev;
  while (true) {
    prev = x;
    x = (x + n / x) >> 1;
    if (x >= prev) break;
  }
  return prev;
}

Integer ikth_root(const Integer& n, unsigned k) {
  if (n < 0) throw std::domain_error("ikth_root of negative integer");
  if (k == 0) throw std::domain_error("ikth_root with k = 0");
  if (k == 1 || n == 0 || n == 1) return n;
  if (k == 2) return isqrt(n);
  size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer x = Integer(1) << ((bits + k - 1) / k);
  Integer prev;
  while (true) {
    prev = x;
    Integer xk1 = 1;  // x^(k-1)
    for (unsigned i = 0; i + 1 < k; ++i) xk1 *= x;
    x = ((k - 1) * x + n / xk1) / k;
    if (x >= prev) break;
  }
  return prev;
}

std::optional<Integer> perfect_power_root(const Integer& n, unsigned k) {
  if (k < 2) throw std::domain_error("perfect_power_root requires k >= 2");
  if (n < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = perfect_power_root(-n, k);
    if (!r) return std::nullopt;
    return -*r;
  }
  Integer r = ikth_root(n, k);
  Integer p = 1;
  for (unsigned i = 0; i < k; ++i) p *= r;
  if (p == n) return r;
  return std::nullopt;
}

std::optional<Rational> rational_kth_root(const Rational& q, unsigned k) {
  if (k < 2) throw std::domain_error("rational_kth_root requires k >= 2");
  auto rn = perfect_power_root(numerator(q), k);
  if (!rn) return std::nullopt;
  auto rd = perfect_power_root(denominator(q), k);
  if (!rd) return std::nullopt;
  return make_rational(*rn, *rd);
}

Integer height(const Rational& q) {
  Integer n = abs(numerator(q));
  return n > denominator(q) ? n : denominator(q);
}

std::optional<Rational> parse_rational(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_digits(den)) return std::nullopt;
  }
  bool neg = false;
  if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
    neg = num[0] == '-';
    num.remove_prefix(1);
  }
  if (!is_digits(num)) return std::nullopt;
  Integer n(std::string(num), 10);
  Integer d = den.empty() ? Integer(1) : Integer(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (neg) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

}  // namespace fawaid
