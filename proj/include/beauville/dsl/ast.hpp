#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "beauville/exact/rational.hpp"

namespace beauville {

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

/// Expression tree. Sums keep one sign per child; product and compose are
/// binary and left associative. Literals are nonnegative. Source positions
/// are carried for error messages and ignored by ==.
struct Ast {
  enum class Kind { literal, imag, symbol, call, bracket, product, compose, power, sum };

  Kind kind = Kind::literal;
  Rational value;              // literal
  std::string name;            // symbol, call
  std::vector<AstPtr> args;    // call arguments, bracket/product/compose operands, power base, sum terms
  std::vector<int> signs;      // sum: +1 or -1 per term
  unsigned exponent = 0;       // power
  std::size_t line = 0;
  std::size_t column = 0;

  static AstPtr literal(const Rational& v);
  static AstPtr imag();
  static AstPtr symbol(const std::string& name);
  static AstPtr call(const std::string& name, std::vector<AstPtr> args);
  static AstPtr bracket(AstPtr a, AstPtr b);
  static AstPtr product(AstPtr a, AstPtr b);
  static AstPtr compose(AstPtr a, AstPtr b);
  static AstPtr power(AstPtr base, unsigned k);
  static AstPtr sum(std::vector<AstPtr> terms, std::vector<int> signs);
};

bool operator==(const Ast& a, const Ast& b);

/// expr   := ["-"] term (("+" | "-") term)*
/// term   := factor (("*" | "o") factor)*
/// factor := atom ("^" integer)?
/// atom   := literal | "i" | name | name "(" expr ("," expr)* ")"
///         | "[" expr "," expr "]" | "(" expr ")"
/// Unknown names and syntax errors raise ParseError with line and column.
AstPtr parse(const std::string& src);

/// Canonical text; parse(print(x)) == x.
std::string print(const Ast& x);

/// Names accepted by the parser, over all contexts.
const std::vector<std::string>& known_symbols();

}  // namespace beauville
