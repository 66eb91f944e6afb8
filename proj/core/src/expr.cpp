#include "fawaid/expr.hpp"

#include <sstream>

namespace fawaid {

ExprPtr Expr::constant(Rational v) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::Constant;
  e->value_ = std::move(v);
  return e;
}
ExprPtr Expr::variable(std::string name) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::Variable;
  e->name_ = std::move(name);
  return e;
}
ExprPtr Expr::parameter(std::string name) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::Parameter;
  e->name_ = std::move(name);
  return e;
}
ExprPtr Expr::make_binary(Kind k, ExprPtr a, ExprPtr b) {
  if (!a || !b) throw std::invalid_argument("null operand");
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = k;
  e->lhs_ = std::move(a);
  e->rhs_ = std::move(b);
  return e;
}
ExprPtr Expr::add(ExprPtr a, ExprPtr b) { return make_binary(Kind::Add, std::move(a), std::move(b)); }
ExprPtr Expr::sub(ExprPtr a, ExprPtr b) { return make_binary(Kind::Sub, std::move(a), std::move(b)); }
ExprPtr Expr::mul(ExprPtr a, ExprPtr b) { return make_binary(Kind::Mul, std::move(a), std::move(b)); }
ExprPtr Expr::div(ExprPtr a, ExprPtr b) { return make_binary(Kind::Div, std::move(a), std::move(b)); }
ExprPtr Expr::pow(ExprPtr base, unsigned exponent) {
  if (!base) throw std::invalid_argument("null operand");
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::Pow;
  e->lhs_ = std::move(base);
  e->index_ = exponent;
  return e;
}
ExprPtr Expr::root(ExprPtr arg, unsigned index) {
  if (!arg) throw std::invalid_argument("null operand");
  if (index < 2) throw std::invalid_argument("root index must be >= 2");
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::Root;
  e->lhs_ = std::move(arg);
  e->index_ = index;
  return e;
}

std::optional<Rational> eval(const ExprPtr& e, const Assignment& a) {
  switch (e->kind()) {
    case Expr::Kind::Constant:
      return e->value();
    case Expr::Kind::Variable:
    case Expr::Kind::Parameter: {
      auto it = a.find(e->name());
      if (it == a.end()) throw MissingSymbolError(e->name());
      return it->second;
    }
    case Expr::Kind::Add: {
      auto l = eval(e->lhs(), a), r = eval(e->rhs(), a);
      if (!l || !r) return std::nullopt;
      return Rational(*l + *r);
    }
    case Expr::Kind::Sub: {
      auto l = eval(e->lhs(), a), r = eval(e->rhs(), a);
      if (!l || !r) return std::nullopt;
      return Rational(*l - *r);
    }
    case Expr::Kind::Mul: {
      auto l = eval(e->lhs(), a), r = eval(e->rhs(), a);
      if (!l || !r) return std::nullopt;
      return Rational(*l * *r);
    }
    case Expr::Kind::Div: {
      auto l = eval(e->lhs(), a), r = eval(e->rhs(), a);
      if (!l || !r || *r == 0) return std::nullopt;
      return Rational(*l / *r);
    }
    case Expr::Kind::Pow: {
      auto b = eval(e->lhs(), a);
      if (!b) return std::nullopt;
      Rational acc(1);
      for (unsigned i = 0; i < e->exponent(); ++i) acc *= *b;
      return acc;
    }
    case Expr::Kind::Root: {
      auto v = eval(e->lhs(), a);
      if (!v) return std::nullopt;
      if (e->index() % 2 == 0 && sgn(*v) < 0) return std::nullopt;
      return rational_kth_root(*v, e->index());
    }
  }
  throw std::logic_error("corrupt expression node");
}

ExprPtr substitute(const ExprPtr& e, const std::string& symbol, const ExprPtr& replacement) {
  switch (e->kind()) {
    case Expr::Kind::Constant:
      return e;
    case Expr::Kind::Variable:
    case Expr::Kind::Parameter:
      return e->name() == symbol ? replacement : e;
    case Expr::Kind::Add:
      return Expr::add(substitute(e->lhs(), symbol, replacement),
                       substitute(e->rhs(), symbol, replacement));
    case Expr::Kind::Sub:
      return Expr::sub(substitute(e->lhs(), symbol, replacement),
                       substitute(e->rhs(), symbol, replacement));
    case Expr::Kind::Mul:
      return Expr::mul(substitute(e->lhs(), symbol, replacement),
                       substitute(e->rhs(), symbol, replacement));
    case Expr::Kind::Div:
      return Expr::div(substitute(e->lhs(), symbol, replacement),
                       substitute(e->rhs(), symbol, replacement));
    case Expr::Kind::Pow:
      return Expr::pow(substitute(e->lhs(), symbol, replacement), e->exponent());
    case Expr::Kind::Root:
      return Expr::root(substitute(e->lhs(), symbol, replacement), e->index());
  }
  throw std::logic_error("corrupt expression node");
}

ExprPtr simplify_roots(const ExprPtr& e, const std::set<std::string>& nonneg) {
  switch (e->kind()) {
    case Expr::Kind::Constant:
    case Expr::Kind::Variable:
    case Expr::Kind::Parameter:
      return e;
    case Expr::Kind::Add:
      return Expr::add(simplify_roots(e->lhs(), nonneg), simplify_roots(e->rhs(), nonneg));
    case Expr::Kind::Sub:
      return Expr::sub(simplify_roots(e->lhs(), nonneg), simplify_roots(e->rhs(), nonneg));
    case Expr::Kind::Mul:
      return Expr::mul(simplify_roots(e->lhs(), nonneg), simplify_roots(e->rhs(), nonneg));
    case Expr::Kind::Div:
      return Expr::div(simplify_roots(e->lhs(), nonneg), simplify_roots(e->rhs(), nonneg));
    case Expr::Kind::Pow: {
      auto base = simplify_roots(e->lhs(), nonneg);
      return Expr::pow(base, e->exponent());
    }
    case Expr::Kind::Root: {
      auto arg = simplify_roots(e->lhs(), nonneg);
      // root(v^m, k) with k | m collapses to v^(m/k) for nonnegative v.
      if (arg->kind() == Expr::Kind::Pow && arg->lhs()->kind() == Expr::Kind::Variable &&
          nonneg.count(arg->lhs()->name()) && arg->exponent() % e->index() == 0) {
        unsigned q = arg->exponent() / e->index();
        return q == 1 ? arg->lhs() : Expr::pow(arg->lhs(), q);
      }
      return Expr::root(arg, e->index());
    }
  }
  throw std::logic_error("corrupt expression node");
}

static void collect_symbols(const ExprPtr& e, std::set<std::string>& out) {
  switch (e->kind()) {
    case Expr::Kind::Constant:
      return;
    case Expr::Kind::Variable:
    case Expr::Kind::Parameter:
      out.insert(e->name());
      return;
    default:
      if (e->lhs()) collect_symbols(e->lhs(), out);
      if (e->rhs()) collect_symbols(e->rhs(), out);
  }
}

std::set<std::string> symbols(const ExprPtr& e) {
  std::set<std::string> out;
  collect_symbols(e, out);
  return out;
}

namespace {
// Binding strength used to decide parenthesization: additive (1),
// multiplicative (2), power (3), atom (4).
int precedence(const ExprPtr& e) {
  switch (e->kind()) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Pow:
      return 3;
    default:
      return 4;
  }
}

void render_to(const ExprPtr& e, std::ostream& os);

void child(const ExprPtr& c, int parent_prec, bool tight, std::ostream& os) {
  bool parens = precedence(c) < parent_prec || (tight && precedence(c) == parent_prec);
  bool negative_const =
      c->kind() == Expr::Kind::Constant && sgn(c->value()) < 0;
  bool fraction_const =
      c->kind() == Expr::Kind::Constant && !is_integer(c->value()) && parent_prec >= 2;
  if (negative_const || fraction_const) parens = true;
  if (parens) os << "(";
  render_to(c, os);
  if (parens) os << ")";
}

void render_to(const ExprPtr& e, std::ostream& os) {
  switch (e->kind()) {
    case Expr::Kind::Constant:
      os << to_string(e->value());
      return;
    case Expr::Kind::Variable:
    case Expr::Kind::Parameter:
      os << e->name();
      return;
    case Expr::Kind::Add:
      child(e->lhs(), 1, false, os);
      os << " + ";
      child(e->rhs(), 1, false, os);
      return;
    case Expr::Kind::Sub:
      child(e->lhs(), 1, false, os);
      os << " - ";
      child(e->rhs(), 1, true, os);
      return;
    case Expr::Kind::Mul:
      child(e->lhs(), 2, false, os);
      os << "*";
      child(e->rhs(), 2, false, os);
      return;
    case Expr::Kind::Div:
      child(e->lhs(), 2, false, os);
      os << "/";
      child(e->rhs(), 2, true, os);
      return;
    case Expr::Kind::Pow:
      child(e->lhs(), 4, false, os);
      os << "^" << e->exponent();
      return;
    case Expr::Kind::Root:
      if (e->index() == 2)
        os << "sqrt(";
      else if (e->index() == 3)
        os << "cbrt(";
      else
        os << "root" << e->index() << "(";
      render_to(e->lhs(), os);
      os << ")";
      return;
  }
}
}  // namespace

std::string render(const ExprPtr& e) {
  std::ostringstream os;
  render_to(e, os);
  return os.str();
}

std::string render(const Relation& r) {
  switch (r.kind) {
    case Relation::Kind::Equals:
      return render(r.lhs) + " = " + render(r.rhs);
    case Relation::Kind::IsSquare:
      return "is_square(" + render(r.lhs) + ")";
    case Relation::Kind::IsCube:
      return "is_cube(" + render(r.lhs) + ")";
  }
  return {};
}

std::set<std::string> symbols(const Relation& r) {
  auto out = symbols(r.lhs);
  if (r.rhs) {
    auto more = symbols(r.rhs);
    out.insert(more.begin(), more.end());
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::Undefined:
      return "undefined";
  }
  return {};
}

Verdict check_relation(const Relation& r, const Assignment& a) {
  auto l = eval(r.lhs, a);
  if (!l) return Verdict::Undefined;
  switch (r.kind) {
    case Relation::Kind::Equals: {
      auto rv = eval(r.rhs, a);
      if (!rv) return Verdict::Undefined;
      return *l == *rv ? Verdict::Holds : Verdict::Fails;
    }
    case Relation::Kind::IsSquare:
      return is_square(*l) ? Verdict::Holds : Verdict::Fails;
    case Relation::Kind::IsCube:
      return is_cube(*l) ? Verdict::Holds : Verdict::Fails;
  }
  return Verdict::Undefined;
}

SatisfactionReport check_relations(const std::vector<Relation>& rels, const Assignment& a) {
  SatisfactionReport report;
  report.overall = Verdict::Holds;
  for (const auto& r : rels) {
    SatisfactionReport::Entry entry;
    entry.relation = render(r);
    entry.lhs_value = eval(r.lhs, a);
    if (r.rhs) entry.rhs_value = eval(r.rhs, a);
    entry.verdict = check_relation(r, a);
    if (entry.verdict != Verdict::Holds && report.overall == Verdict::Holds)
      report.overall = entry.verdict;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace fawaid
