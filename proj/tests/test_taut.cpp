#include "beauville/error.hpp"
#include "beauville/taut/obstruction.hpp"
#include "doctest.h"

using namespace beauville;

namespace {

TautExpr G(Locus l, int g, TautGen x) { return TautExpr::gen(l, g, x); }
const RatPoly b = RatPoly::x(Var::b);

}  // namespace

TEST_CASE("weights") {
  const int g = 3;
  const TautExpr th = G(Locus::boundary, g, TautGen::theta), xi = G(Locus::boundary, g, TautGen::xi2),
                 p1 = G(Locus::boundary, g, TautGen::psi1), p2 = G(Locus::boundary, g, TautGen::psi2);
  CHECK(n_weight(th).begin()->first == 2);
  CHECK(n_weight(xi).begin()->first == 1);
  CHECK(n_weight(p1).begin()->first == 0);
  // multiplicative and a ring map after adjoining N
  const TautExpr x = th + xi + p1, y = th * p2 - Rational(3) * xi * xi + p1;
  const auto nx = n_weight(x), ny = n_weight(y), nxy = n_weight(x * y);
  std::map<int, TautExpr> conv;
  for (const auto& [a, xa] : nx)
    for (const auto& [c, yc] : ny) {
      auto it = conv.try_emplace(a + c, Locus::boundary, g).first;
      it->second += xa * yc;
    }
  std::erase_if(conv, [](const auto& kv) { return kv.second.is_zero(); });
  CHECK(conv == nxy);
  const TautExpr xy = x * y;
  for (const auto& [t, c] : xy.terms()) CHECK(weight(t.mono) <= 4);
  CHECK_THROWS_AS(TautExpr::gen(Locus::total, g, TautGen::xi2), InvalidArgument);
  CHECK_THROWS_AS(th * G(Locus::total, g, TautGen::theta), DimensionMismatch);
}

TEST_CASE("boundary pullback") {
  const int g = 5;
  const TautExpr P = psi_sum(Locus::boundary, g);
  const TautExpr th = G(Locus::boundary, g, TautGen::theta);
  CHECK(boundary_pull(G(Locus::total, g, TautGen::theta)) == th + Rational(1, 2) * P);
  CHECK(boundary_pull(G(Locus::total, g, TautGen::delta)) == -P);
  const TautExpr Theta = G(Locus::total, g, TautGen::theta) + b * G(Locus::total, g, TautGen::delta);
  CHECK(boundary_pull(Theta) == th + (RatPoly(Rational(1, 2)) - b) * P);
  CHECK_THROWS_AS(boundary_pull(G(Locus::total, g, TautGen::kappa1)), OutsideModel);
  // pullback is a ring map
  CHECK(boundary_pull(Theta * Theta) == boundary_pull(Theta) * boundary_pull(Theta));
}

TEST_CASE("abelian pushforward") {
  PushContext ctx = push_context(3);  // J_{2,2} has relative dimension 2
  const TautExpr th = G(Locus::boundary, 3, TautGen::theta);
  const TautExpr one = TautExpr::scalar(Locus::boundary_base, 3, RatPoly(1));
  CHECK(abelian_push(Rational(1, 2) * th * th, ctx) == one);
  // weight < 2n in codim n goes to zero
  const TautExpr P = psi_sum(Locus::boundary, 3);
  CHECK(abelian_push(th * P, ctx).is_zero());
  CHECK(abelian_push(P * P, ctx).is_zero());
  // xi2 at top weight needs a relation
  const TautExpr xi = G(Locus::boundary, 3, TautGen::xi2);
  CHECK_THROWS_AS(abelian_push(th * xi * xi, ctx), OutsideModel);
  // projection formula: pi_*(x . pi^* u) = pi_*(x) u
  const TautExpr u = G(Locus::boundary, 3, TautGen::psi1);
  const TautExpr ub = G(Locus::boundary_base, 3, TautGen::psi1);
  for (const TautExpr& x : {th * th, th * th * th, th * P, Rational(5) * th * th + th}) {
    CHECK(abelian_push(x * u, ctx) == abelian_push(x, ctx) * ub);
  }
}

TEST_CASE("DR extraction") {
  const DrExtraction e = extract_dr_coefficient(dr_shape(3), 6);
  CHECK(e.theta_coefficient == Rational(1));
  CHECK(e.at_plus == Rational(-1, 48));
  CHECK(e.at_minus == Rational(-1, 48));
  CHECK(e.leading == Rational(1, 48));
  CHECK(e.other_max_weight < 2 * 6 - 2);
  int smooth = 0, opaque = 0;
  for (const auto& c : e.contributions) {
    CHECK(c.needed.is_constant());
    if (c.family.rfind("cst", 0) == 0) {
      ++smooth;
      CHECK(c.vanishes);
    }
    opaque += c.opaque;
  }
  CHECK(smooth == 4);
  CHECK(opaque == 2 + 3 + 4);

  DrRelationShape bad = dr_shape(1);
  bad.families.back().f = RatPoly::monomial(Var::d, 9, Rational(1));
  CHECK_THROWS_AS(validate(bad), InvalidArgument);
}

TEST_CASE("psi bridge and other terms") {
  const PsiBridge br = psi_bridge_relation(4);
  CHECK(br.psi_h2p == -G(Locus::boundary, 4, TautGen::xi2));
  for (int g = 3; g <= 7; ++g) {
    for (int j = 1; j <= g - 1; ++j)
      for (int l = 0; l <= j; ++l)
        for (const auto& [w, part] : n_weight(other_term(g, g - 1 - j, l, j - l))) CHECK(w < 2 * g - 2);
  }
}

TEST_CASE("top theta power pushes to delta/48") {
  for (int g = 2; g <= 12; ++g) {
    AssumptionLedger led;
    CHECK(top_theta_push(g, led) == Rational(1, 48) * G(Locus::base, g, TautGen::delta));
    CHECK(led.uses(Axiom::dr_relation));
  }
}

TEST_CASE("Theta = theta + b delta") {
  const OpenPart p = open_part(5);
  CHECK(p.weight_part == RatPoly(6) * RatPoly::x(Var::a) *
                             (pow(G(Locus::open, 5, TautGen::theta), 5) * G(Locus::open, 5, TautGen::kappa1)));
  CHECK(p.factor == RatPoly(720) * RatPoly::x(Var::a));
  CHECK(p.ledger.uses(Axiom::h2_jg_span));
}

TEST_CASE("genus >= 4 contradiction") {
  for (int g = 4; g <= 8; ++g) {
    const GeFourResult r = genus_ge4_obstruction(g);
    const RatPoly h = RatPoly(Rational(1, 2)) - b;
    CHECK(r.boundary_poly == RatPoly(binomial(g + 1, 2)) * h * h);
    CHECK(r.boundary_roots == std::vector<Rational>{Rational(1, 2)});
    CHECK(r.push_poly == RatPoly(Rational(1, 48)) + b);
    CHECK(r.push_roots == std::vector<Rational>{Rational(-1, 48)});
    CHECK(r.contradiction);
  }
}

TEST_CASE("genus 3 obstruction") {
  const Obstruction o = genus3_obstruction();
  CHECK(o.poly == RatPoly(Rational(191, 224)) - RatPoly(2) * b - RatPoly(36) * b * b);
  CHECK(o.poly.str() == "191/224 - 2*b - 36*b^2");
  CHECK(o.roots.empty());
  CHECK(!o.certificate.is_square);
  CHECK(o.ledger.uses(Axiom::alpha_weight2_g3));
  CHECK(o.ledger.uses(Axiom::xi_relation_g3));
  CHECK(o.ledger.uses(Axiom::delta_cube_g3));
}

TEST_CASE("genus 2 obstruction") {
  const Obstruction o = genus2_obstruction();
  CHECK(o.poly == RatPoly(Rational(11, 960)) - RatPoly(Rational(1, 32)) * b - b * b);
  CHECK(o.roots.empty());
  CHECK(!o.certificate.is_square);
  CHECK(o.ledger.uses(Axiom::psi_sum_g2));
  CHECK(o.ledger.uses(Axiom::delta_square_g2));
  const LeOneNode n = genus2_le1_theta();
  CHECK(n.roots == std::vector<Rational>{Rational(-1, 48)});
  CHECK(n.poly == RatPoly(6) * (RatPoly(Rational(1, 48)) + b));
}

TEST_CASE("obstruction reports") {
  for (int g : {2, 3, 4, 7}) {
    for (const auto& r : verify_theta_obstruction(g)) {
      INFO(g << " " << r.check << ": " << r.witness);
      CHECK(r.ok());
    }
  }
  for (const auto& r : verify_top_theta(12)) CHECK(r.ok());
  const auto reps = verify_theta_obstruction(3);
  bool seen = false;
  for (const auto& r : reps) {
    if (r.check == "taut.g3.obstruction") {
      seen = true;
      CHECK(r.value == "(191/224 - 2*b - 36*b^2)*iota_*(psi1 + psi2)");
      CHECK(!r.assumptions.empty());
    }
  }
  CHECK(seen);
}
