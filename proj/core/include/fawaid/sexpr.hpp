#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fawaid/expr.hpp"

namespace fawaid {

/// Raised on malformed catalog relation text; message carries the byte
/// offset of the offending token.
struct SexprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Grammar (documented in docs/catalog-format.md):
///   expr     := rational | symbol | list
///   list     := "(" op expr... ")"
///   op       := + | - | * | / | ^ | sqrt | cbrt | root
///   relation := "(" "=" expr expr ")" | "(" "isSquare" expr ")"
///             | "(" "isCube" expr ")"
/// "+" and "*" take two or more arguments, "-" and "/" exactly two,
/// "^" an expression and a nonnegative integer, "root" an expression and an
/// integer index >= 2. Symbols must be declared unknowns or parameters.
ExprPtr parse_sexpr(std::string_view text, const std::set<std::string>& unknowns,
                    const std::set<std::string>& parameters);

Relation parse_relation_sexpr(std::string_view text, const std::set<std::string>& unknowns,
                              const std::set<std::string>& parameters);

/// Inverse of the parsers; emits the canonical spelling.
std::string to_sexpr(const ExprPtr& e);
std::string to_sexpr(const Relation& r);

}  // namespace fawaid
