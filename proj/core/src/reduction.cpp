#include "fawaid/reduction.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <variant>

#include "fawaid/sexpr.hpp"

namespace fawaid {

std::string to_string(StepRule r) {
  switch (r) {
    case StepRule::Substitute:
      return "substitute";
    case StepRule::IsolateRadical:
      return "isolate_radical";
    case StepRule::SquareBothSides:
      return "square_both_sides";
    case StepRule::ClearDenominators:
      return "clear_denominators";
    case StepRule::Collect:
      return "collect";
    case StepRule::FactorOutUnknown:
      return "factor_out_unknown";
    case StepRule::Shift:
      return "shift";
  }
  return {};
}

namespace {

ExprPtr poly_to_expr(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return Expr::constant(Rational(0));
  ExprPtr sum;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    Rational mag = abs(c);
    ExprPtr term;
    if (k == 0) {
      term = Expr::constant(sum ? mag : c);
    } else {
      ExprPtr xk = k == 1 ? Expr::variable(var) : Expr::pow(Expr::variable(var), k);
      if (sum)
        term = mag == 1 ? xk : Expr::mul(Expr::constant(mag), xk);
      else
        term = c == 1 ? xk : Expr::mul(Expr::constant(c), xk);
    }
    if (!sum)
      sum = term;
    else
      sum = sgn(c) < 0 ? Expr::sub(sum, term) : Expr::add(sum, term);
  }
  return sum;
}

// Display-time rewrite: (root(e, k))^m with k | m collapses to e^(m/k).
ExprPtr collapse_pow_root(const ExprPtr& e) {
  switch (e->kind()) {
    case Expr::Kind::Constant:
    case Expr::Kind::Variable:
    case Expr::Kind::Parameter:
      return e;
    case Expr::Kind::Add:
      return Expr::add(collapse_pow_root(e->lhs()), collapse_pow_root(e->rhs()));
    case Expr::Kind::Sub:
      return Expr::sub(collapse_pow_root(e->lhs()), collapse_pow_root(e->rhs()));
    case Expr::Kind::Mul:
      return Expr::mul(collapse_pow_root(e->lhs()), collapse_pow_root(e->rhs()));
    case Expr::Kind::Div:
      return Expr::div(collapse_pow_root(e->lhs()), collapse_pow_root(e->rhs()));
    case Expr::Kind::Pow: {
      auto base = collapse_pow_root(e->lhs());
      if (base->kind() == Expr::Kind::Root && e->exponent() % base->index() == 0) {
        unsigned q = e->exponent() / base->index();
        return q == 1 ? base->lhs() : Expr::pow(base->lhs(), q);
      }
      return Expr::pow(base, e->exponent());
    }
    case Expr::Kind::Root:
      return Expr::root(collapse_pow_root(e->lhs()), e->index());
  }
  throw std::logic_error("corrupt expression node");
}

int count_occurrences(const ExprPtr& e, const std::string& name) {
  switch (e->kind()) {
    case Expr::Kind::Constant:
      return 0;
    case Expr::Kind::Variable:
    case Expr::Kind::Parameter:
      return e->name() == name ? 1 : 0;
    default: {
      int n = 0;
      if (e->lhs()) n += count_occurrences(e->lhs(), name);
      if (e->rhs()) n += count_occurrences(e->rhs(), name);
      return n;
    }
  }
}

std::string render_system(const std::vector<Relation>& rels) {
  std::string out;
  for (size_t i = 0; i < rels.size(); ++i) {
    if (i) out += ";  ";
    out += render(rels[i]);
  }
  return out;
}

void collect_roots(const ExprPtr& e, std::vector<ExprPtr>& out) {
  if (e->kind() == Expr::Kind::Root) out.push_back(e);
  if (e->lhs()) collect_roots(e->lhs(), out);
  if (e->rhs()) collect_roots(e->rhs(), out);
}

// --- arithmetic in Q(u)[s] / (s^2 - s2) without conjugation -----------------

struct LinRad {
  Polynomial a, b;  // a + b*s
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
};
struct LinRadQ {
  LinRad num, den;
};

struct RadicalContext {
  std::string var;
  std::string radical_key;  // s-expr of the radical argument; empty if none
  ExprPtr radical_arg;
  Polynomial arg_num, arg_den;  // radical argument as arg_num/arg_den
  Polynomial s2;                // s^2 = arg_num * arg_den, s = arg_den * sqrt(arg)
};

LinRad lr_add(const LinRad& u, const LinRad& v) { return {u.a + v.a, u.b + v.b}; }
LinRad lr_neg(const LinRad& u) { return {-u.a, -u.b}; }
LinRad lr_mul(const LinRad& u, const LinRad& v, const Polynomial& s2) {
  return {u.a * v.a + u.b * v.b * s2, u.a * v.b + u.b * v.a};
}

LinRadQ lq_add(const LinRadQ& u, const LinRadQ& v, const Polynomial& s2) {
  return {lr_add(lr_mul(u.num, v.den, s2), lr_mul(v.num, u.den, s2)), lr_mul(u.den, v.den, s2)};
}
LinRadQ lq_sub(const LinRadQ& u, const LinRadQ& v, const Polynomial& s2) {
  return {lr_add(lr_mul(u.num, v.den, s2), lr_neg(lr_mul(v.num, u.den, s2))),
          lr_mul(u.den, v.den, s2)};
}
LinRadQ lq_mul(const LinRadQ& u, const LinRadQ& v, const Polynomial& s2) {
  return {lr_mul(u.num, v.num, s2), lr_mul(u.den, v.den, s2)};
}
LinRadQ lq_div(const LinRadQ& u, const LinRadQ& v, const Polynomial& s2) {
  if (v.num.is_zero()) throw NotReducible("division by an identically zero expression");
  return {lr_mul(u.num, v.den, s2), lr_mul(u.den, v.num, s2)};
}

LinRadQ to_linradq(const ExprPtr& e, const RadicalContext& ctx) {
  const Polynomial one = Polynomial::constant(Rational(1));
  switch (e->kind()) {
    case Expr::Kind::Constant:
      return {{Polynomial::constant(e->value()), Polynomial()}, {one, Polynomial()}};
    case Expr::Kind::Variable:
    case Expr::Kind::Parameter:
      if (e->name() != ctx.var)
        throw NotReducible("stray symbol '" + e->name() + "' at the single-unknown stage");
      return {{Polynomial::x(), Polynomial()}, {one, Polynomial()}};
    case Expr::Kind::Add:
      return lq_add(to_linradq(e->lhs(), ctx), to_linradq(e->rhs(), ctx), ctx.s2);
    case Expr::Kind::Sub:
      return lq_sub(to_linradq(e->lhs(), ctx), to_linradq(e->rhs(), ctx), ctx.s2);
    case Expr::Kind::Mul:
      return lq_mul(to_linradq(e->lhs(), ctx), to_linradq(e->rhs(), ctx), ctx.s2);
    case Expr::Kind::Div:
      return lq_div(to_linradq(e->lhs(), ctx), to_linradq(e->rhs(), ctx), ctx.s2);
    case Expr::Kind::Pow: {
      LinRadQ base = to_linradq(e->lhs(), ctx);
      LinRadQ acc{{one, Polynomial()}, {one, Polynomial()}};
      for (unsigned i = 0; i < e->exponent(); ++i) acc = lq_mul(acc, base, ctx.s2);
      return acc;
    }
    case Expr::Kind::Root: {
      if (e->index() != 2 || to_sexpr(e->lhs()) != ctx.radical_key)
        throw NotReducible("expression carries a radical outside the single-radical pipeline");
      // sqrt(arg) = s / arg_den.
      return {{Polynomial(), one}, {ctx.arg_den, Polynomial()}};
    }
  }
  throw std::logic_error("corrupt expression node");
}

// Radical-free conversion to a polynomial quotient.
std::pair<Polynomial, Polynomial> to_ratfn(const ExprPtr& e, const std::string& var) {
  RadicalContext ctx;
  ctx.var = var;
  ctx.s2 = Polynomial();
  LinRadQ q = to_linradq(e, ctx);
  if (!q.num.b.is_zero() || !q.den.b.is_zero())
    throw NotReducible("unexpected radical");  // radical_key is empty, cannot happen
  return {q.num.a, q.den.a};
}

// --- reduction plans --------------------------------------------------------

struct ChangeVar {
  std::string var;
};
struct Eliminate {
  std::string var;
  size_t rel_index;
};
struct Sweep {};
struct FactorOut {};
struct DepressShift {};
struct SquareCollect {};
using Directive = std::variant<ChangeVar, Eliminate, Sweep, FactorOut, DepressShift, SquareCollect>;

std::vector<Directive> plan_for(int id, const std::string& variant) {
  if (id == 20 && variant == "alt-root") return {ChangeVar{"x"}, SquareCollect{}};
  switch (id) {
    case 4:
      return {ChangeVar{"x"}, ChangeVar{"y"}, Eliminate{"Y", 0}, Sweep{}};
    case 5:
      return {Eliminate{"y", 0}, Sweep{}};
    case 6:
      return {ChangeVar{"x"}, ChangeVar{"y"}, Eliminate{"Y", 0}, Sweep{}};
    case 15:
      return {Eliminate{"y", 0}, Sweep{}};
    case 16:
      return {SquareCollect{}};
    case 17:
      return {Eliminate{"y", 0}, Sweep{}};
    case 20:
      return {SquareCollect{}};
    case 21:
      return {Sweep{}};
    case 22:
      return {Eliminate{"x", 0}, Sweep{}};
    case 25:
      return {Eliminate{"y", 0}, Sweep{}};
    case 28:
      return {Sweep{}, FactorOut{}, DepressShift{}};
    case 29:
      return {Eliminate{"x", 1}, Sweep{}};
    case 31:
      return {Sweep{}};
    case 32:
      return {Eliminate{"y", 0}, Sweep{}};
    case 33:
      return {Eliminate{"y", 0}, Sweep{}};
    default:
      return {};
  }
}

// --- pipeline state ---------------------------------------------------------

struct Pipeline {
  const ProblemSpec& problem;
  ReductionTrace trace;
  std::vector<Relation> rels;
  std::set<std::string> vars;    // live unknowns
  std::set<std::string> nonneg;  // change-of-variable symbols, known >= 0
  bool collected = false;

  explicit Pipeline(const ProblemSpec& p) : problem(p) {}

  TraceStep& push_step(StepRule rule, std::string note, std::string before, std::string after) {
    TraceStep s;
    s.rule = rule;
    s.note = std::move(note);
    s.before = std::move(before);
    s.after = std::move(after);
    s.system = rels;
    if (rule == StepRule::SquareBothSides) ++trace.squaring_count;
    trace.steps.push_back(std::move(s));
    return trace.steps.back();
  }

  Relation simplified(const Relation& r) const {
    Relation out = r;
    out.lhs = simplify_roots(out.lhs, nonneg);
    if (out.rhs) out.rhs = simplify_roots(out.rhs, nonneg);
    return out;
  }

  void substitute_everywhere(const std::string& name, const ExprPtr& value) {
    for (auto& r : rels) {
      r.lhs = substitute(r.lhs, name, value);
      if (r.rhs) r.rhs = substitute(r.rhs, name, value);
      r = simplified(r);
    }
  }

  void apply(const ChangeVar& d) {
    std::string upper(1, std::toupper(static_cast<unsigned char>(d.var[0])));
    if (upper == d.var) upper += "0";
    std::string before = render_system(rels);
    ExprPtr repl = Expr::pow(Expr::variable(upper), 2);
    nonneg.insert(upper);
    substitute_everywhere(d.var, repl);
    vars.erase(d.var);
    vars.insert(upper);
    trace.definitions.emplace_back(d.var, repl);
    push_step(StepRule::Substitute, d.var + " := " + upper + "^2 with " + upper + " = sqrt(" + d.var + ") >= 0",
              before, render_system(rels));
  }

  // Structural inversion of the defining relation around the target unknown.
  void apply(const Eliminate& d) {
    if (d.rel_index >= rels.size()) throw ReductionError("eliminate: bad relation index");
    Relation def = rels[d.rel_index];
    if (def.kind != Relation::Kind::Equals)
      throw NotReducible("eliminate needs an equation");
    int occ = count_occurrences(def.lhs, d.var) + count_occurrences(def.rhs, d.var);
    if (occ != 1) throw NotReducible("eliminate needs a single occurrence of " + d.var);
    ExprPtr L = def.lhs, R = def.rhs;
    if (count_occurrences(L, d.var) == 0) std::swap(L, R);
    while (!(L->kind() == Expr::Kind::Variable && L->name() == d.var)) {
      switch (L->kind()) {
        case Expr::Kind::Add:
          if (count_occurrences(L->lhs(), d.var)) {
            R = Expr::sub(R, L->rhs());
            L = L->lhs();
          } else {
            R = Expr::sub(R, L->lhs());
            L = L->rhs();
          }
          break;
        case Expr::Kind::Sub:
          if (count_occurrences(L->lhs(), d.var)) {
            R = Expr::add(R, L->rhs());
            L = L->lhs();
          } else {
            R = Expr::sub(L->lhs(), R);
            L = L->rhs();
          }
          break;
        case Expr::Kind::Mul:
          if (count_occurrences(L->lhs(), d.var)) {
            R = Expr::div(R, L->rhs());
            L = L->lhs();
          } else {
            R = Expr::div(R, L->lhs());
            L = L->rhs();
          }
          break;
        case Expr::Kind::Div:
          if (count_occurrences(L->lhs(), d.var)) {
            R = Expr::mul(R, L->rhs());
            L = L->lhs();
          } else {
            R = Expr::div(L->lhs(), R);
            L = L->rhs();
          }
          break;
        case Expr::Kind::Pow: {
          unsigned k = L->exponent();
          if (k == 0) throw NotReducible("cannot invert a zeroth power");
          if (k % 2 == 0) {
            const ExprPtr& base = L->lhs();
            if (!(base->kind() == Expr::Kind::Variable && nonneg.count(base->name())))
              throw NotReducible("even power inversion needs a known-nonnegative variable");
          }
          R = k == 1 ? R : Expr::root(R, k);
          L = L->lhs();
          break;
        }
        case Expr::Kind::Root: {
          if (L->index() != 2) throw NotReducible("only square roots are eliminated");
          // Show the radical isolated, then square both sides.
          {
            auto snapshot = rels;
            snapshot[d.rel_index] = Relation::equals(L, R);
            std::string before = render_system(rels);
            rels = snapshot;
            push_step(StepRule::IsolateRadical, "isolate " + render(L), before, render_system(rels));
          }
          R = Expr::pow(R, 2);
          L = L->lhs();
          {
            auto snapshot = rels;
            snapshot[d.rel_index] = Relation::equals(L, R);
            std::string before = render_system(rels);
            rels = snapshot;
            push_step(StepRule::SquareBothSides, "square both sides", before, render_system(rels));
          }
          break;
        }
        default:
          throw NotReducible("cannot isolate " + d.var);
      }
    }
    std::string before = render_system(rels);
    rels.erase(rels.begin() + static_cast<long>(d.rel_index));
    substitute_everywhere(d.var, R);
    vars.erase(d.var);
    trace.definitions.emplace_back(d.var, R);
    push_step(StepRule::Substitute, d.var + " := " + render(R), before, render_system(rels))
        .dropped_index = static_cast<int>(d.rel_index);
  }

  std::string the_var() const {
    if (vars.size() != 1)
      throw NotReducible("expected a single unknown, have " + std::to_string(vars.size()));
    return *vars.begin();
  }

  void apply(const Sweep&) {
    if (rels.size() != 1 || rels[0].kind != Relation::Kind::Equals)
      throw NotReducible("radical elimination needs a single equation");
    std::string u = the_var();

    RadicalContext ctx;
    ctx.var = u;
    std::vector<ExprPtr> roots;
    collect_roots(rels[0].lhs, roots);
    collect_roots(rels[0].rhs, roots);
    if (!roots.empty()) {
      ctx.radical_arg = roots[0]->lhs();
      ctx.radical_key = to_sexpr(ctx.radical_arg);
      for (const auto& r : roots)
        if (r->index() != 2 || to_sexpr(r->lhs()) != ctx.radical_key)
          throw NotReducible("more than one distinct radical remains");
      auto [pn, pd] = to_ratfn(ctx.radical_arg, u);
      ctx.arg_num = pn;
      ctx.arg_den = pd;
      ctx.s2 = pn * pd;
    }

    LinRadQ moved = lq_sub(to_linradq(rels[0].lhs, ctx), to_linradq(rels[0].rhs, ctx), ctx.s2);
    LinRad N = moved.num;
    const LinRad& D = moved.den;
    if (N.is_zero()) throw NotReducible("the relation collapses to 0 = 0");

    // Cancel polynomial factors shared by the numerator and the denominator:
    // at their zeros the relation is undefined, so no solution is lost.
    {
      Polynomial gN = N.b.is_zero() ? N.a : poly_gcd(N.a, N.b);
      Polynomial gD = D.b.is_zero() ? D.a : poly_gcd(D.a, D.b);
      Polynomial g = poly_gcd(gN, gD);
      if (g.degree() >= 1) {
        auto [qa, ra] = divmod(N.a, g);
        if (!ra.is_zero()) throw ReductionError("internal: inexact gcd cancellation");
        N.a = qa;
        if (!N.b.is_zero()) {
          auto [qb, rb] = divmod(N.b, g);
          if (!rb.is_zero()) throw ReductionError("internal: inexact gcd cancellation");
          N.b = qb;
        }
      }
    }

    bool trivial_den = D.b.is_zero() && D.a.degree() == 0;
    Polynomial A = N.a;
    Polynomial BQ = N.b * ctx.arg_den;  // coefficient of sqrt(arg) after clearing
    if (!trivial_den) {
      std::string before = render_system(rels);
      ExprPtr lhs = poly_to_expr(A, u);
      if (!N.b.is_zero())
        lhs = Expr::add(lhs, Expr::mul(poly_to_expr(BQ, u), Expr::root(ctx.radical_arg, 2)));
      rels[0] = Relation::equals(lhs, Expr::constant(Rational(0)));
      push_step(StepRule::ClearDenominators, "multiply through by the denominators", before,
                render_system(rels));
    }

    if (!N.b.is_zero()) {
      Polynomial iso_lhs = BQ, iso_rhs = -A;
      if (sgn(iso_lhs.leading()) < 0) {
        iso_lhs = -iso_lhs;
        iso_rhs = A;
      }
      // Joint rescaling to coprime integer coefficients across both sides.
      {
        Integer lcm_den(1), content(0);
        for (const Polynomial* p : {&iso_lhs, &iso_rhs})
          for (const auto& c : p->coeffs()) {
            Integer g = gcd(lcm_den, denominator(c));
            lcm_den = lcm_den / g * denominator(c);
          }
        for (const Polynomial* p : {&iso_lhs, &iso_rhs})
          for (const auto& c : p->coeffs())
            content = gcd(content, numerator(c) * (lcm_den / denominator(c)));
        if (content != 0) {
          Rational scale = make_rational(lcm_den, content);
          iso_lhs = iso_lhs * scale;
          iso_rhs = iso_rhs * scale;
        }
      }
      {
        std::string before = render_system(rels);
        rels[0] = Relation::equals(Expr::mul(poly_to_expr(iso_lhs, u), Expr::root(ctx.radical_arg, 2)),
                                   poly_to_expr(iso_rhs, u));
        push_step(StepRule::IsolateRadical, "isolate sqrt(" + render(ctx.radical_arg) + ")", before,
                  render_system(rels));
      }
      {
        std::string before = render_system(rels);
        rels[0] = Relation::equals(
            Expr::mul(poly_to_expr(iso_lhs * iso_lhs, u), ctx.radical_arg),
            poly_to_expr(iso_rhs * iso_rhs, u));
        push_step(StepRule::SquareBothSides, "square both sides", before, render_system(rels));
      }
      Polynomial raw = N.b * N.b * ctx.s2 - A * A;
      finish_collect(raw, u);
    } else {
      finish_collect(A, u);
    }
  }

  void finish_collect(const Polynomial& raw, const std::string& u) {
    if (raw.is_zero()) throw NotReducible("the relation collapses to 0 = 0");
    std::string before = render_system(rels);
    trace.result = raw.primitive();
    trace.variable = u;
    rels[0] = Relation::equals(poly_to_expr(trace.result, u), Expr::constant(Rational(0)));
    collected = true;
    push_step(StepRule::Collect, "collect into a polynomial", before, render_system(rels));
  }

  void apply(const SquareCollect&) {
    if (rels.size() != 1 || rels[0].kind != Relation::Kind::IsSquare)
      throw NotReducible("square-target collection needs a single is-square relation");
    std::string u = the_var();
    auto [num, den] = to_ratfn(rels[0].lhs, u);
    // is_square(N/D) = is_square(N*D) away from zeros of D; content must be
    // preserved, so no primitive normalization here.
    std::string before = render_system(rels);
    trace.result = num * den;
    trace.variable = u;
    trace.target = ReductionTarget::Square;
    rels[0] = Relation::is_square(poly_to_expr(trace.result, u));
    collected = true;
    push_step(StepRule::Collect,
              den.degree() == 0 && den.coeff(0) == 1
                  ? "collect the square target"
                  : "collect the square target (is_square(N/D) matches is_square(N*D))",
              before, render_system(rels));
  }

  void apply(const FactorOut&) {
    if (!collected) throw ReductionError("factor_out before collect");
    auto [m, core] = trace.result.factor_out_x();
    if (m == 0) throw ReductionError("factor_out with nonzero constant term");
    std::string u = trace.variable;
    std::string before = render_system(rels);
    if (auto asg = assignment_with(u, Rational(0))) trace.factor_candidates.push_back(*asg);
    trace.result = core;
    rels[0] = Relation::equals(poly_to_expr(trace.result, u), Expr::constant(Rational(0)));
    auto& step = push_step(StepRule::FactorOutUnknown,
                           "factor out " + u + (m > 1 ? "^" + std::to_string(m) : "") + "; " + u +
                               " = 0 recorded as a candidate",
                           before, render_system(rels));
    step.factor_power = m;
    step.factor_var = u;
  }

  void apply(const DepressShift&) {
    if (!collected) throw ReductionError("shift before collect");
    auto [c, dep] = depress(trace.result);
    std::string old_var = trace.variable;
    std::string new_var(1, std::toupper(static_cast<unsigned char>(old_var[0])));
    if (new_var == old_var) new_var += "1";
    std::string before = render_system(rels);
    trace.definitions.emplace_back(
        old_var, Expr::sub(Expr::variable(new_var), Expr::constant(c)));
    trace.result = dep;
    trace.variable = new_var;
    vars.erase(old_var);
    vars.insert(new_var);
    rels[0] = Relation::equals(poly_to_expr(trace.result, new_var), Expr::constant(Rational(0)));
    std::ostringstream note;
    note << "change of variable " << new_var << " = " << old_var;
    if (sgn(c) >= 0)
      note << " + " << to_string(c);
    else
      note << " - " << to_string(Rational(-c));
    push_step(StepRule::Shift, note.str(), before, render_system(rels));
  }

  std::optional<Assignment> assignment_with(const std::string& var, const Rational& v) const {
    Assignment a = trace.bindings;
    a[var] = v;
    for (auto it = trace.definitions.rbegin(); it != trace.definitions.rend(); ++it) {
      auto val = eval(it->second, a);
      if (!val) return std::nullopt;
      a[it->first] = *val;
    }
    return a;
  }
};

// Builds the audit's sampling hint. Radicands that must be rational squares
// at sample points are located in the composed definitions and original
// relations; a quadratic radicand q gets the chord parametrization through a
// small rational point (d, e) with e^2 = q(d):
//   x(t) = d + (q'(d) - 2 e t) / (t^2 - a2).
ExprPtr make_sample_map(const ReductionTrace& trace,
                        const std::map<std::string, ExprPtr>& composed) {
  ExprPtr t = Expr::variable("t");
  auto compose_expr = [&](ExprPtr e) {
    for (const auto& [name, expr] : composed) e = substitute(e, name, expr);
    return e;
  };

  bool want_square_var = false;
  std::map<std::string, std::pair<Polynomial, Polynomial>> quad_args;
  auto consider = [&](const ExprPtr& e) {
    std::vector<ExprPtr> roots;
    collect_roots(e, roots);
    for (const auto& r : roots) {
      const ExprPtr& arg = r->lhs();
      if (arg->kind() == Expr::Kind::Pow && arg->exponent() % r->index() == 0) continue;
      if (arg->kind() == Expr::Kind::Variable && arg->name() == trace.variable) {
        want_square_var = true;
        continue;
      }
      try {
        auto [num, den] = to_ratfn(arg, trace.variable);
        if (den.degree() == 0 && num.degree() >= 1 && num.degree() <= 2) {
          Polynomial q = num * (Rational(1) / den.coeff(0));
          quad_args.emplace(q.render(trace.variable), std::make_pair(q, den));
        }
      } catch (const ReductionError&) {
        // Not expressible in the final variable; leave it to resampling.
      }
    }
  };
  for (const auto& [name, expr] : trace.definitions) {
    (void)name;
    consider(compose_expr(expr));
  }
  for (const auto& rel : trace.original) {
    consider(compose_expr(rel.lhs));
    if (rel.rhs) consider(compose_expr(rel.rhs));
  }

  if (quad_args.size() == 1 && !want_square_var) {
    const Polynomial& q = quad_args.begin()->second.first;
    Rational a2 = q.coeff(2), a1 = q.coeff(1), a0 = q.coeff(0);
    if (a2 == 0) {
      // w^2 = a1 x + a0 is a parabola: x(t) = (t^2 - a0) / a1.
      return Expr::div(Expr::sub(Expr::pow(t, 2), Expr::constant(a0)), Expr::constant(a1));
    }
    static const long nums[] = {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 10, -10};
    static const long dens[] = {1, 2, 3};
    for (long dd : dens) {
      for (long nn : nums) {
        Rational d = make_rational(nn, dd);
        Rational qd = q(d);
        if (sgn(qd) < 0) continue;
        auto e = rational_kth_root(qd, 2);
        if (!e) continue;
        Rational slope = Rational(2) * a2 * d + a1;  // q'(d)
        return Expr::add(
            Expr::constant(d),
            Expr::div(Expr::sub(Expr::constant(slope),
                                Expr::mul(Expr::constant(Rational(2) * *e), t)),
                      Expr::sub(Expr::pow(t, 2), Expr::constant(a2))));
      }
    }
  }
  if (want_square_var) return Expr::pow(t, 2);
  return t;
}

}  // namespace

std::optional<Assignment> ReductionTrace::assignment_at(const Rational& v) const {
  Assignment a = bindings;
  a[variable] = v;
  for (auto it = definitions.rbegin(); it != definitions.rend(); ++it) {
    auto val = eval(it->second, a);
    if (!val) return std::nullopt;
    a[it->first] = *val;
  }
  return a;
}

std::optional<Assignment> ReductionTrace::original_assignment_at(const Rational& v) const {
  auto a = assignment_at(v);
  if (!a) return std::nullopt;
  Assignment out = bindings;
  for (const auto& u : unknowns) {
    auto it = a->find(u);
    if (it == a->end()) return std::nullopt;
    out[u] = it->second;
  }
  return out;
}

const std::vector<int>& reducible_problems() {
  static const std::vector<int> ids = {4, 5, 6, 15, 16, 17, 20, 21, 22, 25, 28, 29, 31, 32, 33};
  return ids;
}

bool is_reducible(int id) {
  const auto& ids = reducible_problems();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Assignment resolve_bindings(const ProblemSpec& p, const Assignment& bindings) {
  Assignment out;
  auto params = p.parameter_set();
  for (const auto& [name, value] : bindings) {
    if (!params.count(name))
      throw ReductionError("problem " + std::to_string(p.id) + " has no parameter '" + name + "'");
    out[name] = value;
  }
  for (const auto& ps : p.parameters) {
    if (out.count(ps.name)) continue;
    if (ps.default_value)
      out[ps.name] = *ps.default_value;
    else
      throw ReductionError("parameter '" + ps.name + "' of problem " + std::to_string(p.id) +
                           " is unbound; pass --param " + ps.name + "=<rational>");
  }
  return out;
}

ReductionTrace reduce_problem(const ProblemSpec& p, const Assignment& bindings,
                              const std::string& variant) {
  if (!is_reducible(p.id))
    throw NotReducible("problem " + std::to_string(p.id) +
                       " is not reducible by this pipeline; use the search engines");
  Pipeline pipe(p);
  pipe.trace.problem_id = p.id;
  pipe.trace.variant = variant;
  pipe.trace.unknowns = p.unknowns;
  pipe.trace.bindings = resolve_bindings(p, bindings);
  pipe.vars = p.unknown_set();

  // Bind parameters up front so every later stage is ground in the unknowns.
  for (const auto& r : p.relations_for(variant)) {
    Relation bound = r;
    for (const auto& [name, value] : pipe.trace.bindings) {
      auto c = Expr::constant(value);
      bound.lhs = substitute(bound.lhs, name, c);
      if (bound.rhs) bound.rhs = substitute(bound.rhs, name, c);
    }
    pipe.rels.push_back(std::move(bound));
  }
  pipe.trace.original = pipe.rels;

  for (const auto& directive : plan_for(p.id, variant))
    std::visit([&](const auto& d) { pipe.apply(d); }, directive);
  if (!pipe.collected) throw ReductionError("plan ended without collecting a polynomial");

  // Compose the definitions into per-unknown back-substitution text.
  std::map<std::string, ExprPtr> composed;
  composed[pipe.trace.variable] = Expr::variable(pipe.trace.variable);
  for (auto it = pipe.trace.definitions.rbegin(); it != pipe.trace.definitions.rend(); ++it) {
    ExprPtr e = it->second;
    for (const auto& [name, expr] : composed) e = substitute(e, name, expr);
    composed[it->first] = collapse_pow_root(e);
  }
  pipe.trace.nonneg_vars = pipe.nonneg;
  pipe.trace.sample_map = make_sample_map(pipe.trace, composed);
  std::ostringstream sm;
  sm << pipe.trace.variable << " is "
     << (pipe.trace.target == ReductionTarget::Root ? "a root of the polynomial"
                                                    : "a point where the polynomial is a rational square");
  for (const auto& u : p.unknowns) {
    auto it = composed.find(u);
    if (it != composed.end() && !(it->second->kind() == Expr::Kind::Variable && it->second->name() == u))
      sm << "; " << u << " = " << render(it->second);
  }
  pipe.trace.solution_map = sm.str();
  return pipe.trace;
}

}  // namespace fawaid
