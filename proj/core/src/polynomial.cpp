#include "fawaid/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fawaid {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(Rational c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::monomial(Rational c, size_t power) {
  std::vector<Rational> v(power + 1, Rational(0));
  v[power] = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::x() { return monomial(Rational(1), 1); }

Polynomial Polynomial::from_ints(std::vector<long> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Polynomial::coeff(size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  auto v = coeffs_;
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  auto v = coeffs_;
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::compose_shift(const Rational& c) const {
  // Horner in the polynomial ring: p evaluated at (X - c).
  Polynomial shift({-c, Rational(1)});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * shift + Polynomial::constant(*it);
  return acc;
}

std::pair<size_t, Polynomial> Polynomial::factor_out_x() const {
  if (is_zero()) return {0, *this};
  size_t m = 0;
  while (m < coeffs_.size() && coeffs_[m] == 0) ++m;
  return {m, Polynomial(std::vector<Rational>(coeffs_.begin() + m, coeffs_.end()))};
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer lcm_den(1);
  for (const auto& c : coeffs_) {
    Integer g = gcd(lcm_den, denominator(c));
    lcm_den = lcm_den / g * denominator(c);
  }
  Integer content(0);
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    Integer n = numerator(c) * (lcm_den / denominator(c));
    content = gcd(content, n);
    ints.push_back(std::move(n));
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rational> v;
  v.reserve(ints.size());
  for (auto& n : ints) v.emplace_back(make_rational(n / content, Integer(1)));
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Polynomial r = a;
  std::vector<Rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rational f = r.leading() / b.leading();
    size_t shift = r.degree() - b.degree();
    q[shift] = f;
    r = r - Polynomial::monomial(f, shift) * b;
  }
  return {Polynomial(std::move(q)), std::move(r)};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());  // monic
}

namespace {
// Positive divisors by trial division up to sqrt(n); constants in this
// corpus stay small after clearing denominators.
std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}
}  // namespace

RationalRootReport rational_roots_report(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
  RationalRootReport report;
  auto [m, core] = p.factor_out_x();
  report.zero_multiplicity = m;
  if (m > 0) report.roots.emplace_back(0);
  report.stripped = core.primitive();
  if (report.stripped.degree() == 0) {
    std::sort(report.roots.begin(), report.roots.end());
    return report;
  }
  const Polynomial& q = report.stripped;
  Integer constant = numerator(q.coeff(0));
  Integer lead = numerator(q.leading());
  for (const auto& dc : divisors(constant)) {
    for (const auto& dl : divisors(lead)) {
      if (gcd(dc, dl) != 1) continue;
      Rational cand = make_rational(dc, dl);
      report.candidates.push_back(cand);
      report.candidates.push_back(-cand);
    }
  }
  std::sort(report.candidates.begin(), report.candidates.end());
  for (const auto& c : report.candidates)
    if (q(c) == 0) report.roots.push_back(c);
  std::sort(report.roots.begin(), report.roots.end());
  report.roots.erase(std::unique(report.roots.begin(), report.roots.end()), report.roots.end());
  return report;
}

std::vector<Rational> rational_roots(const Polynomial& p) { return rational_roots_report(p).roots; }

std::string to_string(CubicClassification::Structure s) {
  switch (s) {
    case CubicClassification::Structure::ThreeDistinctReal:
      return "three distinct real roots";
    case CubicClassification::Structure::OneRealConjugatePair:
      return "one real root and a complex-conjugate pair";
    case CubicClassification::Structure::RepeatedRoot:
      return "a repeated root";
  }
  return {};
}

CubicClassification cubic_classify(const Rational& p, const Rational& q) {
  CubicClassification c;
  c.discriminant = Rational(-4) * p * p * p - Rational(27) * q * q;
  int s = sgn(c.discriminant);
  c.structure = s > 0   ? CubicClassification::Structure::ThreeDistinctReal
                : s < 0 ? CubicClassification::Structure::OneRealConjugatePair
                        : CubicClassification::Structure::RepeatedRoot;
  return c;
}

std::pair<Rational, Polynomial> depress(const Polynomial& p) {
  int n = p.degree();
  if (n < 2) throw std::invalid_argument("depress needs degree >= 2");
  // p(x), x = X - c with c = a_{n-1} / (n a_n) kills the X^{n-1} term.
  Rational c = p.coeff(n - 1) / (Rational(n) * p.leading());
  return {c, p.compose_shift(c)};
}

Rational discriminant(const Polynomial& p) {
  switch (p.degree()) {
    case 2: {
      Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
      return b * b - Rational(4) * a * c;
    }
    case 3: {
      // a x^3 + b x^2 + c x + d
      Rational a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
      return Rational(18) * a * b * c * d - Rational(4) * b * b * b * d + b * b * c * c -
             Rational(4) * a * c * c * c - Rational(27) * a * a * d * d;
    }
    case 4: {
      // Discriminant of the depressed form x^4 + p x^2 + q x + r equals the
      // discriminant of the original (shift-invariant); normalize first.
      Polynomial monic = p * (Rational(1) / p.leading());
      auto [c, dep] = depress(monic);
      (void)c;
      Rational P = dep.coeff(2), Q = dep.coeff(1), R = dep.coeff(0);
      Rational lead_scale = p.leading();
      Rational d = Rational(16) * P * P * P * P * R - Rational(4) * P * P * P * Q * Q -
                   Rational(128) * P * P * R * R + Rational(144) * P * Q * Q * R -
                   Rational(27) * Q * Q * Q * Q + Rational(256) * R * R * R;
      // disc(a p_monic) = a^(2n-2) disc(p_monic) with n = 4.
      Rational a6 = lead_scale;
      for (int i = 1; i < 6; ++i) a6 *= lead_scale;
      return d * a6;
    }
    default:
      throw std::invalid_argument("discriminant implemented for degrees 2, 3, 4 only");
  }
}

Polynomial ferrari_resolvent(const Polynomial& quartic) {
  if (quartic.degree() != 4) throw std::invalid_argument("ferrari_resolvent needs degree 4");
  Polynomial monic = quartic * (Rational(1) / quartic.leading());
  if (monic.coeff(3) != 0)
    throw std::invalid_argument("ferrari_resolvent needs a depressed quartic");
  Rational p = monic.coeff(2), q = monic.coeff(1), r = monic.coeff(0);
  return Polynomial({-q * q, p * p - Rational(4) * r, Rational(2) * p, Rational(1)});
}

std::optional<QuadraticPair> ferrari_split(const Polynomial& quartic) {
  Polynomial monic = quartic * (Rational(1) / quartic.leading());
  Rational p = monic.coeff(2), q = monic.coeff(1), r = monic.coeff(0);
  for (const auto& t : rational_roots(ferrari_resolvent(quartic))) {
    if (t == 0) {
      if (q != 0) continue;
      // Biquadratic: x^4 + p x^2 + r = (x^2 + b1)(x^2 + b2).
      Rational disc = p * p - Rational(4) * r;
      auto s = rational_kth_root(disc, 2);
      if (sgn(disc) < 0 || !s) continue;
      Rational b1 = (p + *s) / 2, b2 = (p - *s) / 2;
      return QuadraticPair{Polynomial({b1, Rational(0), Rational(1)}),
                           Polynomial({b2, Rational(0), Rational(1)})};
    }
    if (sgn(t) < 0) continue;
    auto alpha = rational_kth_root(t, 2);
    if (!alpha) continue;
    // x^4 + p x^2 + q x + r = (x^2 + a x + beta)(x^2 - a x + gamma).
    Rational sum = p + t;           // beta + gamma
    Rational diff = q / *alpha;     // gamma - beta
    Rational beta = (sum - diff) / 2, gamma = (sum + diff) / 2;
    if (beta * gamma != r) continue;
    return QuadraticPair{Polynomial({beta, *alpha, Rational(1)}),
                         Polynomial({gamma, -*alpha, Rational(1)})};
  }
  return std::nullopt;
}

std::string Polynomial::render(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (c == 0) continue;
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit = mag == 1 && k > 0;
    if (!unit) {
      if (is_integer(mag))
        os << to_string(mag);
      else
        os << "(" << to_string(mag) << ")";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace fawaid
