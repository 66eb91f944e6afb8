#include "fawaid/sexpr.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace fawaid {

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;
  const std::set<std::string>& unknowns;
  const std::set<std::string>& parameters;

  [[noreturn]] void fail(const std::string& what) const {
    throw SexprError(what + " at offset " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string token() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    if (pos == start) fail("expected token");
    return std::string(text.substr(start, pos - start));
  }

  unsigned integer_token(long min_value) {
    size_t at = pos;
    std::string t = token();
    try {
      size_t used = 0;
      long v = std::stol(t, &used);
      if (used != t.size() || v < min_value) throw std::invalid_argument(t);
      return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      pos = at;
      fail("expected integer >= " + std::to_string(min_value) + ", got '" + t + "'");
    }
  }

  ExprPtr atom(const std::string& t) {
    if (std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '-' || t[0] == '+') {
      auto q = parse_rational(t);
      if (!q) fail("malformed rational literal '" + t + "'");
      return Expr::constant(*q);
    }
    if (unknowns.count(t)) return Expr::variable(t);
    if (parameters.count(t)) return Expr::parameter(t);
    fail("undeclared symbol '" + t + "'");
  }

  ExprPtr expr() {
    if (peek() != '(') return atom(token());
    expect('(');
    std::string op = token();
    ExprPtr result;
    if (op == "+" || op == "*") {
      std::vector<ExprPtr> args;
      while (peek() != ')') args.push_back(expr());
      if (args.size() < 2) fail("'" + op + "' needs at least two arguments");
      result = args[0];
      for (size_t i = 1; i < args.size(); ++i)
        result = op == "+" ? Expr::add(result, args[i]) : Expr::mul(result, args[i]);
    } else if (op == "-" || op == "/") {
      auto a = expr();
      auto b = expr();
      result = op == "-" ? Expr::sub(a, b) : Expr::div(a, b);
    } else if (op == "^") {
      auto base = expr();
      unsigned k = integer_token(0);
      result = Expr::pow(base, k);
    } else if (op == "sqrt") {
      result = Expr::root(expr(), 2);
    } else if (op == "cbrt") {
      result = Expr::root(expr(), 3);
    } else if (op == "root") {
      auto arg = expr();
      unsigned k = integer_token(2);
      result = Expr::root(arg, k);
    } else {
      fail("unknown operator '" + op + "'");
    }
    expect(')');
    return result;
  }

  Relation relation() {
    expect('(');
    std::string op = token();
    Relation rel;
    if (op == "=") {
      auto a = expr();
      auto b = expr();
      rel = Relation::equals(a, b);
    } else if (op == "isSquare") {
      rel = Relation::is_square(expr());
    } else if (op == "isCube") {
      rel = Relation::is_cube(expr());
    } else {
      fail("unknown relation head '" + op + "'");
    }
    expect(')');
    return rel;
  }

  void finish() {
    if (!at_end()) fail("trailing input");
  }
};

}  // namespace

ExprPtr parse_sexpr(std::string_view text, const std::set<std::string>& unknowns,
                    const std::set<std::string>& parameters) {
  Parser p{text, 0, unknowns, parameters};
  auto e = p.expr();
  p.finish();
  return e;
}

Relation parse_relation_sexpr(std::string_view text, const std::set<std::string>& unknowns,
                              const std::set<std::string>& parameters) {
  Parser p{text, 0, unknowns, parameters};
  auto r = p.relation();
  p.finish();
  return r;
}

namespace {
void emit(const ExprPtr& e, std::ostream& os) {
  switch (e->kind()) {
    case Expr::Kind::Constant:
      os << to_string(e->value());
      return;
    case Expr::Kind::Variable:
    case Expr::Kind::Parameter:
      os << e->name();
      return;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Div: {
      char op = e->kind() == Expr::Kind::Add   ? '+'
                : e->kind() == Expr::Kind::Sub ? '-'
                : e->kind() == Expr::Kind::Mul ? '*'
                                               : '/';
      os << "(" << op << " ";
      emit(e->lhs(), os);
      os << " ";
      emit(e->rhs(), os);
      os << ")";
      return;
    }
    case Expr::Kind::Pow:
      os << "(^ ";
      emit(e->lhs(), os);
      os << " " << e->exponent() << ")";
      return;
    case Expr::Kind::Root:
      if (e->index() == 2 || e->index() == 3) {
        os << (e->index() == 2 ? "(sqrt " : "(cbrt ");
        emit(e->lhs(), os);
        os << ")";
      } else {
        os << "(root ";
        emit(e->lhs(), os);
        os << " " << e->index() << ")";
      }
      return;
  }
}
}  // namespace

std::string to_sexpr(const ExprPtr& e) {
  std::ostringstream os;
  emit(e, os);
  return os.str();
}

std::string to_sexpr(const Relation& r) {
  std::ostringstream os;
  switch (r.kind) {
    case Relation::Kind::Equals:
      os << "(= ";
      emit(r.lhs, os);
      os << " ";
      emit(r.rhs, os);
      os << ")";
      break;
    case Relation::Kind::IsSquare:
      os << "(isSquare ";
      emit(r.lhs, os);
      os << ")";
      break;
    case Relation::Kind::IsCube:
      os << "(isCube ";
      emit(r.lhs, os);
      os << ")";
      break;
  }
  return os.str();
}

}  // namespace fawaid
