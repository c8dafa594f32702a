#include "beauville/error.hpp"
#include "beauville/lattice/mukai.hpp"
#include "doctest.h"

using namespace beauville;
using G = GaussianRational;

namespace {
LatticeClass cls(const SpacePtr& s, const std::string& l) { return LatticeClass::basis(s, l); }
}  // namespace

TEST_CASE("distinguished pairings") {
  const auto s = MukaiSpace::standard(3, Rational(2));
  CHECK(pairing(cls(s, "alpha"), cls(s, "beta")) == G(-1));
  CHECK(pairing(cls(s, "Theta"), cls(s, "Hyp")) == G(1));
  CHECK(square(cls(s, "alpha")) == G(0));
  CHECK(square(cls(s, "beta")) == G(0));
  CHECK(square(cls(s, "eta3")) == G(2));
  const auto x = cls(s, "alpha") + G(3) * cls(s, "eta1");
  const auto y = cls(s, "beta") - cls(s, "eta1");
  CHECK(pairing(x, y) == pairing(y, x));
  CHECK(pairing(x, y) == G(-1) + G(-6));
}

TEST_CASE("invalid spaces are rejected") {
  DenseMat<Rational> g = DenseMat<Rational>::Constant(2, 2, Rational(0));
  g(0, 1) = g(1, 0) = Rational(1);
  CHECK_THROWS_AS(MukaiSpace({"alpha", "beta"}, g, 2), InvalidArgument);
  g(0, 1) = g(1, 0) = Rational(-1);
  CHECK_NOTHROW(MukaiSpace({"alpha", "beta"}, g, 2));
  g(0, 1) = Rational(0);
  CHECK_THROWS_AS(MukaiSpace({"alpha", "beta"}, g, 2), InvalidArgument);
  CHECK_THROWS_AS(MukaiSpace::standard(2, Rational(0)), InvalidArgument);
  const auto a = MukaiSpace::standard(2, Rational(1));
  const auto b = MukaiSpace::standard(3, Rational(1));
  CHECK_THROWS_AS(pairing(cls(a, "alpha"), cls(b, "beta")), InvalidArgument);
}

TEST_CASE("solve lambda") {
  const auto s = MukaiSpace::standard(2, Rational(2));
  const auto h = cls(s, "Hyp");
  // q(A) = 2, (A, H) = 1
  const auto a = cls(s, "Theta") + cls(s, "eta1");
  CHECK(square(a) == G(2));
  CHECK(pairing(a, h) == G(1));
  const Rational l = solve_lambda(a, h);
  CHECK(l == Rational(-1));
  CHECK(square(a + G(l) * h) == G(0));
  CHECK(solve_lambda(cls(s, "Theta"), h) == Rational(0));
  CHECK_THROWS_AS(solve_lambda(cls(s, "eta1"), h), InvalidArgument);
  const auto a2 = G(Rational(3, 7)) * cls(s, "Theta") + G(5) * cls(s, "eta2") - cls(s, "Hyp");
  CHECK(square(a2 + G(solve_lambda(a2, h)) * h) == G(0));
}

TEST_CASE("fourier matrix images") {
  for (int g = 2; g <= 12; ++g) {
    for (int c0 : {1, -1}) {
      for (int c1 : {1, -1}) {
        for (int extra : {0, 2}) {
          const auto s = MukaiSpace::standard(g, Rational(-3), extra);
          const auto f = fourier_matrix(*s, c0, c1);
          CHECK(is_isometry(*s, f));
          const G k(Rational(g + 1, 2));
          CHECK(apply(f, cls(s, "beta")) == G(c0) * cls(s, "Hyp"));
          CHECK(apply(f, cls(s, "alpha")) == G(-c0) * (cls(s, "Theta") - k * cls(s, "beta")));
          CHECK(apply(f, apply(f, cls(s, "beta"))) == -cls(s, "beta"));
          CHECK(apply(f, cls(s, "eta2")) == G(c1) * cls(s, "eta2"));
        }
      }
    }
  }
}

TEST_CASE("extra directions do not disturb existing classes") {
  const auto small = MukaiSpace::standard(4, Rational(2), 0);
  const auto big = MukaiSpace::standard(4, Rational(2), 3);
  const auto fs = fourier_matrix(*small, 1, -1);
  const auto fb = fourier_matrix(*big, 1, -1);
  for (const auto& a : small->labels()) {
    for (const auto& b : small->labels()) {
      CHECK(pairing(cls(small, a), cls(small, b)) == pairing(cls(big, a), cls(big, b)));
      CHECK(pairing(apply(fs, cls(small, a)), cls(small, b)) == pairing(apply(fb, cls(big, a)), cls(big, b)));
    }
  }
}

TEST_CASE("fourier matrix needs the hyperbolic pair") {
  const auto s = MukaiSpace::four_class(Rational(1));
  CHECK_THROWS_AS(fourier_matrix(*s, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(fourier_matrix(*MukaiSpace::standard(2, Rational(1)), 2, 1), InvalidArgument);
}

TEST_CASE("json round trip") {
  const auto s = MukaiSpace::standard(5, Rational(-7, 3), 1);
  const auto doc = s->to_json();
  const auto back = MukaiSpace::from_json(nlohmann::json::parse(doc.dump()));
  CHECK(back->same_as(*s));
  CHECK(doc.dump().find("\"-7/3\"") != std::string::npos);
  CHECK_THROWS_AS(MukaiSpace::from_json(nlohmann::json::parse("{\"labels\":[]}")), InvalidArgument);
}
