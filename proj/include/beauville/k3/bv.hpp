#pragma once

#include <array>
#include <string>

#include "beauville/exact/rational.hpp"

namespace beauville {

/// Beauville-Voisin basis of the tautological Chow ring of the elliptic K3:
/// fundamental class, section, fiber, BV point.
enum class Bv { one, s, f, c };

const char* bv_name(Bv b);
int bv_codim(Bv b);
const std::array<Bv, 4>& bv_basis();

class BvClass {
 public:
  BvClass() = default;
  BvClass(Bv b, const Rational& k = Rational(1));  // NOLINT(google-explicit-constructor)
  static BvClass theta();  // s + f

  const Rational& operator[](Bv b) const { return c_[static_cast<int>(b)]; }
  Rational& operator[](Bv b) { return c_[static_cast<int>(b)]; }
  bool is_zero() const;
  std::string str() const;

  BvClass operator-() const;
  friend BvClass operator+(const BvClass& a, const BvClass& b);
  friend BvClass operator-(const BvClass& a, const BvClass& b);
  friend BvClass operator*(const Rational& k, const BvClass& a);
  friend BvClass operator*(const BvClass& a, const BvClass& b);  // intersection product
  friend bool operator==(const BvClass& a, const BvClass& b) = default;

 private:
  std::array<Rational, 4> c_{};
};

/// s f = c, f f = 0, s s = -2c, c kills positive codimension.
BvClass bv_mul(const BvClass& x, const BvClass& y);

enum class Direction { forward, inverse };
BvClass bv_fourier(const BvClass& x, Direction d);

/// CH(P^1) = Q unit + Q point.
struct BaseClass {
  Rational unit;
  Rational point;
  friend bool operator==(const BaseClass&, const BaseClass&) = default;
};

/// pi_*(1, s, f, c) = (0, unit, 0, point)
BaseClass base_push(const BvClass& x);
/// pi^*(unit) = [S], pi^*(point) = f
BvClass base_pull(const BaseClass& y);
BaseClass base_mul(const BaseClass& a, const BaseClass& b);

}  // namespace beauville
