#include "beauville/dsl/ast.hpp"

#include <algorithm>
#include <cctype>

#include "beauville/error.hpp"

namespace beauville {

AstPtr Ast::literal(const Rational& v) {
  if (v.sign() < 0) throw InvalidArgument("literals are nonnegative; use a sum for negation");
  auto a = std::make_shared<Ast>();
  a->kind = Kind::literal;
  a->value = v;
  return a;
}

AstPtr Ast::imag() {
  auto a = std::make_shared<Ast>();
  a->kind = Kind::imag;
  return a;
}

AstPtr Ast::symbol(const std::string& name) {
  auto a = std::make_shared<Ast>();
  a->kind = Kind::symbol;
  a->name = name;
  return a;
}

AstPtr Ast::call(const std::string& name, std::vector<AstPtr> args) {
  if (args.empty()) throw InvalidArgument("a call needs arguments");
  auto a = std::make_shared<Ast>();
  a->kind = Kind::call;
  a->name = name;
  a->args = std::move(args);
  return a;
}

namespace {

AstPtr binary(Ast::Kind k, AstPtr x, AstPtr y) {
  auto a = std::make_shared<Ast>();
  a->kind = k;
  a->args = {std::move(x), std::move(y)};
  return a;
}

}  // namespace

AstPtr Ast::bracket(AstPtr x, AstPtr y) { return binary(Kind::bracket, std::move(x), std::move(y)); }
AstPtr Ast::product(AstPtr x, AstPtr y) { return binary(Kind::product, std::move(x), std::move(y)); }
AstPtr Ast::compose(AstPtr x, AstPtr y) { return binary(Kind::compose, std::move(x), std::move(y)); }

AstPtr Ast::power(AstPtr base, unsigned k) {
  auto a = std::make_shared<Ast>();
  a->kind = Kind::power;
  a->args = {std::move(base)};
  a->exponent = k;
  return a;
}

AstPtr Ast::sum(std::vector<AstPtr> terms, std::vector<int> signs) {
  if (terms.empty() || terms.size() != signs.size()) throw InvalidArgument("malformed sum");
  for (int s : signs)
    if (s != 1 && s != -1) throw InvalidArgument("sum signs are +1 or -1");
  if (terms.size() == 1 && signs[0] == 1) return terms[0];
  auto a = std::make_shared<Ast>();
  a->kind = Kind::sum;
  a->args = std::move(terms);
  a->signs = std::move(signs);
  return a;
}

bool operator==(const Ast& a, const Ast& b) {
  if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.signs != b.signs ||
      a.exponent != b.exponent || a.args.size() != b.args.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.args.size(); ++k)
    if (!(*a.args[k] == *b.args[k])) return false;
  return true;
}

const std::vector<std::string>& known_symbols() {
  static const std::vector<std::string> names{
      // llv
      "e", "f", "h", "K", "sigma", "sigbar", "L", "Lambda", "H",
      // k3
      "p1", "p2", "Delta", "F", "Finv", "Theta", "s", "c", "e0", "f0", "h0",
      // taut
      "theta", "psi1", "psi2", "xi2", "kappa1", "delta", "a", "b", "push", "pull"};
  return names;
}

namespace {

struct Token {
  enum class Kind { number, name, punct, end };
  Kind kind = Kind::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char ch = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        t.kind = Token::Kind::number;
        t.text = digits();
        if (pos_ + 1 < src_.size() && src_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
          advance();
          t.text += "/" + digits();
        }
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        t.kind = Token::Kind::name;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          t.text += src_[pos_];
          advance();
        }
      } else if (std::string("+-*^()[],").find(ch) != std::string::npos) {
        t.kind = Token::Kind::punct;
        t.text = std::string(1, ch);
        advance();
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", line_, col_);
      }
      out.push_back(t);
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }
  std::string digits() {
    std::string d;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      d += src_[pos_];
      advance();
    }
    return d;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  AstPtr parse_all() {
    AstPtr e = expr();
    if (peek().kind != Token::Kind::end) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(const char* p) const { return peek().kind == Token::Kind::punct && peek().text == p; }
  bool at_name(const char* n) const { return peek().kind == Token::Kind::name && peek().text == n; }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(t.kind == Token::Kind::end ? msg + " (end of input)" : msg, t.line, t.column);
  }
  void expect(const char* p) {
    if (!at(p)) fail(std::string("expected '") + p + "'");
    ++pos_;
  }

  static AstPtr located(AstPtr a, const Token& t) {
    auto m = std::make_shared<Ast>(*a);
    m->line = t.line;
    m->column = t.column;
    return m;
  }

  AstPtr expr() {
    std::vector<AstPtr> terms;
    std::vector<int> signs;
    const Token start = peek();
    int sign = 1;
    if (at("-")) {
      sign = -1;
      ++pos_;
    }
    terms.push_back(term());
    signs.push_back(sign);
    while (at("+") || at("-")) {
      signs.push_back(at("+") ? 1 : -1);
      ++pos_;
      terms.push_back(term());
    }
    if (terms.size() == 1 && signs[0] == 1) return terms[0];
    return located(Ast::sum(std::move(terms), std::move(signs)), start);
  }

  AstPtr term() {
    AstPtr acc = factor();
    while (at("*") || at_name("o")) {
      const Token op = peek();
      const bool comp = op.kind == Token::Kind::name;
      ++pos_;
      AstPtr rhs = factor();
      acc = located(comp ? Ast::compose(acc, rhs) : Ast::product(acc, rhs), op);
    }
    return acc;
  }

  AstPtr factor() {
    AstPtr base = atom();
    if (at("^")) {
      const Token op = peek();
      ++pos_;
      if (peek().kind != Token::Kind::number || peek().text.find('/') != std::string::npos) {
        fail("expected a nonnegative integer exponent");
      }
      const unsigned k = static_cast<unsigned>(std::stoul(peek().text));
      ++pos_;
      return located(Ast::power(base, k), op);
    }
    return base;
  }

  AstPtr atom() {
    const Token t = peek();
    switch (t.kind) {
      case Token::Kind::number:
        ++pos_;
        return located(Ast::literal(Rational::parse(t.text)), t);
      case Token::Kind::name: {
        ++pos_;
        if (t.text == "i") return located(Ast::imag(), t);
        if (t.text == "o") {
          --pos_;
          fail("unexpected 'o'");
        }
        const auto& known = known_symbols();
        if (std::find(known.begin(), known.end(), t.text) == known.end()) {
          --pos_;
          fail("unknown symbol '" + t.text + "'");
        }
        if (at("(")) {
          ++pos_;
          std::vector<AstPtr> args{expr()};
          while (at(",")) {
            ++pos_;
            args.push_back(expr());
          }
          expect(")");
          return located(Ast::call(t.text, std::move(args)), t);
        }
        return located(Ast::symbol(t.text), t);
      }
      case Token::Kind::punct:
        if (t.text == "(") {
          ++pos_;
          AstPtr e = expr();
          expect(")");
          return e;
        }
        if (t.text == "[") {
          ++pos_;
          AstPtr a = expr();
          expect(",");
          AstPtr b = expr();
          expect("]");
          return located(Ast::bracket(a, b), t);
        }
        fail("unexpected '" + t.text + "'");
      case Token::Kind::end:
        fail("expected an expression");
    }
    fail("unexpected token");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool is_atomic(const Ast& x) {
  switch (x.kind) {
    case Ast::Kind::literal:
    case Ast::Kind::imag:
    case Ast::Kind::symbol:
    case Ast::Kind::call:
    case Ast::Kind::bracket: return true;
    default: return false;
  }
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

}  // namespace

AstPtr parse(const std::string& src) { return Parser(Lexer(src).run()).parse_all(); }

std::string print(const Ast& x) {
  switch (x.kind) {
    case Ast::Kind::literal: return x.value.str();
    case Ast::Kind::imag: return "i";
    case Ast::Kind::symbol: return x.name;
    case Ast::Kind::call: {
      std::string out = x.name + "(";
      for (std::size_t k = 0; k < x.args.size(); ++k) out += (k ? ", " : "") + print(*x.args[k]);
      return out + ")";
    }
    case Ast::Kind::bracket: return "[" + print(*x.args[0]) + ", " + print(*x.args[1]) + "]";
    case Ast::Kind::product:
    case Ast::Kind::compose: {
      const Ast& l = *x.args[0];
      const Ast& r = *x.args[1];
      const std::string ls = l.kind == Ast::Kind::sum ? paren(print(l)) : print(l);
      const bool rp = r.kind == Ast::Kind::sum || r.kind == Ast::Kind::product || r.kind == Ast::Kind::compose;
      return ls + (x.kind == Ast::Kind::product ? "*" : " o ") + (rp ? paren(print(r)) : print(r));
    }
    case Ast::Kind::power: {
      const Ast& b = *x.args[0];
      return (is_atomic(b) ? print(b) : paren(print(b))) + "^" + std::to_string(x.exponent);
    }
    case Ast::Kind::sum: {
      std::string out;
      for (std::size_t k = 0; k < x.args.size(); ++k) {
        const Ast& t = *x.args[k];
        const std::string ts = t.kind == Ast::Kind::sum ? paren(print(t)) : print(t);
        if (k == 0) {
          out = x.signs[k] < 0 ? "-" + ts : ts;
        } else {
          out += (x.signs[k] < 0 ? " - " : " + ") + ts;
        }
      }
      return out;
    }
  }
  return "?";
}

}  // namespace beauville
