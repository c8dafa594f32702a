#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "beauville/error.hpp"
#include "beauville/exact/gaussian_rational.hpp"
#include "beauville/exact/rational.hpp"

namespace beauville {

/// The formal parameters that occur: N (multiplication by N), d (degree
/// splitting), b and a (theta divisor ansatz), cst (the unnamed constant of
/// the Fourier operator map).
enum class Var { N, d, b, a, cst };

inline const char* var_name(Var v) {
  switch (v) {
    case Var::N: return "N";
    case Var::d: return "d";
    case Var::b: return "b";
    case Var::a: return "a";
    case Var::cst: return "cst";
  }
  return "?";
}

namespace detail {

inline std::string coeff_str(const Rational& c) { return c.str(); }
inline std::string coeff_str(const GaussianRational& c) { return c.str(); }
template <class C>
std::string coeff_str(const C& c) {
  return c.str();
}

// True when the printed coefficient needs parentheses before "*x^k".
inline bool compound(const std::string& s) {
  for (std::size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '^') return true;
  }
  return false;
}

}  // namespace detail

template <class Coeff>
class Poly;
template <class C>
bool is_zero(const Poly<C>& p);

/// Univariate polynomial with exact coefficients. Coefficients may themselves
/// be polynomials in another variable (N over d). Zero coefficients are never
/// stored, and constants combine with polynomials in any variable.
template <class Coeff>
class Poly {
 public:
  using coeff_type = Coeff;

  Poly() = default;
  Poly(int c) : Poly(Coeff(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Coeff& c, Var v = Var::cst) : var_(v) {  // NOLINT(google-explicit-constructor)
    if (!beauville::is_zero(c)) terms_.emplace(0, c);
  }

  static Poly x(Var v) { return monomial(v, 1, Coeff(1)); }
  static Poly monomial(Var v, int k, const Coeff& c) {
    if (k < 0) throw InvalidArgument("negative exponent");
    Poly p;
    p.var_ = v;
    if (!beauville::is_zero(c)) p.terms_.emplace(k, c);
    return p;
  }

  Var variable() const { return var_; }
  const std::map<int, Coeff>& terms() const { return terms_; }

  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return degree() <= 0; }

  Coeff coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Coeff eval(const Coeff& at) const {
    Coeff acc(0);
    int prev = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      for (int k = it->first; k < prev; ++k) acc *= at;
      acc += it->second;
      prev = it->first;
    }
    for (int k = 0; k < prev; ++k) acc *= at;
    return acc;
  }

  template <class F>
  Poly map_coeffs(F&& f) const {
    Poly out;
    out.var_ = var_;
    for (const auto& [k, c] : terms_) {
      Coeff v = f(c);
      if (!beauville::is_zero(v)) out.terms_.emplace(k, std::move(v));
    }
    return out;
  }

  Poly operator-() const {
    Poly out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
  }

  Poly& operator+=(const Poly& o) {
    var_ = join(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    var_ = join(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    out.var_ = a.join(b);
    if (a.terms_.size() == 1 && a.terms_.begin()->first == 0) {
      const Coeff& s = a.terms_.begin()->second;
      for (const auto& [k, c] : b.terms_) out.add_term(k, s * c);
      return out;
    }
    for (const auto& [i, x] : a.terms_) {
      for (const auto& [j, y] : b.terms_) out.add_term(i + j, x * y);
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_ != b.terms_) return false;
    return a.is_constant() || a.var_ == b.var_;
  }

  /// Ascending powers, e.g. "191/224 - 2*b - 36*b^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      std::string cs = detail::coeff_str(c);
      std::string term;
      if (k == 0) {
        term = detail::compound(cs) ? "(" + cs + ")" : cs;
      } else {
        std::string mono = var_name(var_);
        if (k > 1) mono += "^" + std::to_string(k);
        if (cs == "1") {
          term = mono;
        } else if (cs == "-1") {
          term = "-" + mono;
        } else if (detail::compound(cs)) {
          term = "(" + cs + ")*" + mono;
        } else {
          term = cs + "*" + mono;
        }
      }
      if (out.empty()) {
        out = term;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  Var join(const Poly& o) const {
    if (o.is_constant()) return var_;
    if (is_constant()) return o.var_;
    if (var_ != o.var_) {
      throw InvalidArgument(std::string("cannot combine polynomials in ") + var_name(var_) +
                            " and " + var_name(o.var_));
    }
    return var_;
  }

  void add_term(int k, const Coeff& c) {
    if (beauville::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (beauville::is_zero(it->second)) terms_.erase(it);
    }
  }

  Var var_ = Var::cst;
  std::map<int, Coeff> terms_;
};

template <class C>
bool is_zero(const Poly<C>& p) {
  return p.is_zero();
}

/// Coefficient of x^k, zero when absent.
template <class C>
C poly_coeff(const Poly<C>& p, int k) {
  return p.coeff(k);
}

using RatPoly = Poly<Rational>;
using CstPoly = Poly<GaussianRational>;
using BivPoly = Poly<RatPoly>;

/// f(x) as f(y*x): a polynomial in y whose coefficients are polynomials in x.
inline BivPoly scale_argument(const RatPoly& f, Var y) {
  BivPoly out;
  for (const auto& [k, c] : f.terms()) {
    out += BivPoly::monomial(y, k, RatPoly::monomial(f.variable(), k, c));
  }
  return out;
}

}  // namespace beauville
