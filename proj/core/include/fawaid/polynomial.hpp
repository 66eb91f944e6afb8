#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fawaid/exact.hpp"

namespace fawaid {

/// Dense univariate polynomial over the rationals. Coefficient index equals
/// the power; trailing zeros are trimmed, so the leading coefficient is
/// nonzero unless the polynomial is zero. Degrees in this corpus stay <= 8.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Rational c);
  static Polynomial monomial(Rational c, size_t power);
  /// x (the identity polynomial).
  static Polynomial x();
  /// From integer coefficients listed from the constant term up.
  static Polynomial from_ints(std::vector<long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  Rational coeff(size_t power) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& at) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  /// q with q(X) = p(X - c); equivalently q(x + c) = p(x). This is the
  /// change of variable X = x + c.
  Polynomial compose_shift(const Rational& c) const;

  /// Number of times x divides p, and p with that power removed.
  std::pair<size_t, Polynomial> factor_out_x() const;

  /// Integer-coefficient primitive form: multiplied by the lcm of
  /// denominators, divided by the gcd of the resulting integers, leading
  /// coefficient made positive.
  Polynomial primitive() const;

  std::string render(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exact polynomial division over the rationals: a = q*b + r, deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Outcome of the rational-root theorem search: candidates actually tested
/// (after stripping the power of x) are kept for reporting.
struct RationalRootReport {
  std::vector<Rational> roots;        // all rational roots of the input, 0 included
  std::vector<Rational> candidates;   // +-p/q candidates tested on the stripped part
  size_t zero_multiplicity = 0;       // power of x factored out first
  Polynomial stripped;                // input / x^zero_multiplicity, primitive
};

/// All rational roots of p, found by clearing denominators and testing every
/// +-(divisor of constant)/(divisor of leading) candidate exactly.
/// Throws std::invalid_argument on the zero polynomial.
RationalRootReport rational_roots_report(const Polynomial& p);
std::vector<Rational> rational_roots(const Polynomial& p);

/// Root structure of a depressed cubic x^3 + p x + q read off the exact sign
/// of the discriminant D = -4p^3 - 27q^2.
struct CubicClassification {
  Rational discriminant;
  enum class Structure { ThreeDistinctReal, OneRealConjugatePair, RepeatedRoot };
  Structure structure = Structure::RepeatedRoot;
};
std::string to_string(CubicClassification::Structure s);
CubicClassification cubic_classify(const Rational& p, const Rational& q);

/// Shift that removes the second-highest coefficient: returns c and the
/// depressed polynomial q with q(X) = p(X - c). Requires degree >= 2.
std::pair<Rational, Polynomial> depress(const Polynomial& p);

/// Discriminants from the classical closed forms (degrees 2, 3, 4 only).
Rational discriminant(const Polynomial& p);

/// Resolvent cubic R(t) = t^3 + 2p t^2 + (p^2 - 4r) t - q^2 of a depressed
/// quartic x^4 + p x^2 + q x + r; a rational root t = s^2 (s rational) splits
/// the quartic into two rational quadratics. Throws std::invalid_argument
/// unless the input is a depressed monic-after-scaling quartic.
Polynomial ferrari_resolvent(const Polynomial& quartic);

/// Attempts the Ferrari split of a depressed quartic into two monic rational
/// quadratics; empty when no resolvent root yields one.
struct QuadraticPair {
  Polynomial first, second;
};
std::optional<QuadraticPair> ferrari_split(const Polynomial& quartic);

}  // namespace fawaid
