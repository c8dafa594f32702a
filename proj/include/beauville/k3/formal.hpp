#pragma once

#include <map>
#include <string>

#include "beauville/exact/rational.hpp"

namespace beauville {

/// Finite Q-linear combination of basis keys; no stored zeros. Printing
/// relies on an ADL-visible key_name(Key).
template <class Key>
class Formal {
 public:
  Formal() = default;
  explicit Formal(const Key& k, const Rational& c = Rational(1)) { add(k, c); }

  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Formal& operator+=(const Formal& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Formal& operator-=(const Formal& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Formal operator-() const { return Rational(-1) * *this; }
  friend Formal operator+(Formal a, const Formal& b) { return a += b; }
  friend Formal operator-(Formal a, const Formal& b) { return a -= b; }
  friend Formal operator*(const Rational& k, const Formal& a) {
    Formal r;
    if (k.is_zero()) return r;
    for (const auto& [key, c] : a.terms_) r.terms_.emplace(key, k * c);
    return r;
  }
  friend bool operator==(const Formal& a, const Formal& b) = default;

  std::string str() const {
    std::string out;
    for (const auto& [k, c] : terms_) {
      const std::string name = key_name(k);
      const Rational a = c.abs();
      const std::string term = a == Rational(1) ? name : a.str() + "*" + name;
      if (out.empty()) {
        out = c.sign() < 0 ? "-" + term : term;
      } else {
        out += (c.sign() < 0 ? " - " : " + ") + term;
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::map<Key, Rational> terms_;
};

}  // namespace beauville
