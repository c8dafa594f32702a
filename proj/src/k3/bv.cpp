#include "beauville/k3/bv.hpp"

namespace beauville {

const char* bv_name(Bv b) {
  switch (b) {
    case Bv::one: return "1";
    case Bv::s: return "s";
    case Bv::f: return "f";
    case Bv::c: return "c";
  }
  return "?";
}

int bv_codim(Bv b) {
  switch (b) {
    case Bv::one: return 0;
    case Bv::s:
    case Bv::f: return 1;
    case Bv::c: return 2;
  }
  return 0;
}

const std::array<Bv, 4>& bv_basis() {
  static const std::array<Bv, 4> b{Bv::one, Bv::s, Bv::f, Bv::c};
  return b;
}

BvClass::BvClass(Bv b, const Rational& k) { (*this)[b] = k; }

BvClass BvClass::theta() { return BvClass(Bv::s) + BvClass(Bv::f); }

bool BvClass::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string BvClass::str() const {
  std::string out;
  for (Bv b : bv_basis()) {
    const Rational& k = (*this)[b];
    if (k.is_zero()) continue;
    const bool neg = k.sign() < 0;
    const Rational a = k.abs();
    std::string term = a == Rational(1) ? bv_name(b) : a.str() + "*" + bv_name(b);
    if (b == Bv::one && a != Rational(1)) term = a.str();
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

BvClass BvClass::operator-() const { return Rational(-1) * *this; }

BvClass operator+(const BvClass& a, const BvClass& b) {
  BvClass r;
  for (int i = 0; i < 4; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

BvClass operator-(const BvClass& a, const BvClass& b) { return a + (-b); }

BvClass operator*(const Rational& k, const BvClass& a) {
  BvClass r;
  for (int i = 0; i < 4; ++i) r.c_[i] = k * a.c_[i];
  return r;
}

namespace {

BvClass basis_mul(Bv x, Bv y) {
  if (x == Bv::one) return BvClass(y);
  if (y == Bv::one) return BvClass(x);
  if (x == Bv::c || y == Bv::c) return {};
  if (x == Bv::f && y == Bv::f) return {};
  if (x == Bv::s && y == Bv::s) return BvClass(Bv::c, Rational(-2));
  return BvClass(Bv::c);  // s f
}

}  // namespace

BvClass operator*(const BvClass& a, const BvClass& b) {
  BvClass r;
  for (Bv x : bv_basis()) {
    if (a[x].is_zero()) continue;
    for (Bv y : bv_basis()) {
      if (b[y].is_zero()) continue;
      r = r + (a[x] * b[y]) * basis_mul(x, y);
    }
  }
  return r;
}

BvClass bv_mul(const BvClass& x, const BvClass& y) { return x * y; }

BvClass bv_fourier(const BvClass& x, Direction d) {
  // F: [S] -> -s - f + c, s -> [S] - f + c, f -> -c, c -> f
  // F^-1: [S] -> s + f + c, s -> -[S] - f - c, f -> c, c -> -f
  const BvClass one(Bv::one), s(Bv::s), f(Bv::f), c(Bv::c);
  std::array<BvClass, 4> img;
  if (d == Direction::forward) {
    img = {-s - f + c, one - f + c, -c, f};
  } else {
    img = {s + f + c, -one - f - c, c, -f};
  }
  BvClass r;
  for (Bv b : bv_basis()) r = r + x[b] * img[static_cast<int>(b)];
  return r;
}

BaseClass base_push(const BvClass& x) { return {x[Bv::s], x[Bv::c]}; }

BvClass base_pull(const BaseClass& y) { return y.unit * BvClass(Bv::one) + y.point * BvClass(Bv::f); }

BaseClass base_mul(const BaseClass& a, const BaseClass& b) {
  return {a.unit * b.unit, a.unit * b.point + a.point * b.unit};
}

}  // namespace beauville
