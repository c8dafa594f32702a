#include <chrono>
#include <optional>

#include "beauville/error.hpp"
#include "beauville/k3/verify.hpp"
#include "doctest.h"

using namespace beauville;

namespace {

const BvClass one(Bv::one), s(Bv::s), f(Bv::f), c(Bv::c);
const BvClass th = BvClass::theta();

// the 11 basis correspondences
std::vector<Corr> corr_basis() {
  std::vector<Corr> out;
  for (const auto& k : rel_basis()) out.push_back(Corr::of(RelCycle(k)));
  out.push_back(Corr::F());
  out.push_back(Corr::Finv());
  return out;
}

template <class Fn>
auto attempt(Fn fn) -> std::optional<decltype(fn())> {
  try {
    return fn();
  } catch (const OutsideModel&) {
    return std::nullopt;
  }
}

int key_dim(const RelCycle& x) {
  REQUIRE(x.terms().size() == 1);
  return dimension(x.terms().begin()->first);
}

}  // namespace

TEST_CASE("BV ring") {
  CHECK(s * f == c);
  CHECK((th * th).is_zero());
  CHECK(s * s == Rational(-2) * c);  // (s+f)^2 = s^2 + 2c = 0
  for (Bv a : bv_basis()) {
    for (Bv b : bv_basis()) {
      CHECK(BvClass(a) * BvClass(b) == BvClass(b) * BvClass(a));
      const BvClass p = BvClass(a) * BvClass(b);
      for (Bv x : bv_basis()) {
        if (!p[x].is_zero()) CHECK(bv_codim(x) == bv_codim(a) + bv_codim(b));
      }
      for (Bv e : bv_basis()) {
        CHECK((BvClass(a) * BvClass(b)) * BvClass(e) == BvClass(a) * (BvClass(b) * BvClass(e)));
      }
    }
  }
  CHECK(bv_fourier(one, Direction::forward) == -th + c);
  CHECK(bv_fourier(bv_fourier(one, Direction::forward), Direction::inverse) == one);
  CHECK(bv_fourier(BvClass(), Direction::forward).is_zero());
  CHECK(th.str() == "s + f");
  CHECK((-th + c).str() == "-s - f + c");
}

TEST_CASE("Fourier is linear over the base and symmetric for the fiberwise pairing") {
  for (auto dir : {Direction::forward, Direction::inverse}) {
    for (Bv a : bv_basis()) {
      CHECK(bv_fourier(BvClass(a) * f, dir) == bv_fourier(BvClass(a), dir) * f);
      for (Bv b : bv_basis()) {
        CHECK(base_push(BvClass(b) * bv_fourier(BvClass(a), dir)) == base_push(bv_fourier(BvClass(b), dir) * BvClass(a)));
      }
    }
  }
}

TEST_CASE("relative products") {
  CHECK(rel_mul(p1(f), p2(f)).is_zero());
  CHECK(rel_mul(p1(c), p2(c)).is_zero());
  CHECK((rel_mul(p1(-th), p2(c)) + rel_mul(p1(c), p2(th))).is_zero());
  CHECK(p1(f) == p2(f));
  CHECK(rel_mul(p1(s), p1(f)) == p1(c));
  CHECK(diag_push(th) == pp(th, th));
  CHECK(diag_push(f) == pp(s, f) + pp(f, s));
  CHECK_THROWS_AS(diag_push(c), OutsideModel);
  CHECK_THROWS_AS(rel_mul(rel_diagonal(), rel_diagonal()), OutsideModel);
  CHECK(rel_mul(rel_diagonal(), p1(s)) == diag_push(s));
  CHECK(rel_mul(rel_diagonal(), p2(f)) == diag_push(f));
  CHECK(rel_basis().size() == 9);
  CHECK(pp(s, c).str() == "z");
  CHECK(diag_push(th).str() == "p1*c + p2*c + p1*s.p2*s");

  // pullbacks are ring maps: pp(a,b).pp(x,y) = pp(ax, by)
  for (Bv a : bv_basis())
    for (Bv b : bv_basis())
      for (Bv x : bv_basis())
        for (Bv y : bv_basis()) {
          const BvClass A(a), B(b), X(x), Y(y);
          CHECK(rel_mul(pp(A, B), pp(X, Y)) == pp(A * X, B * Y));
        }
}

TEST_CASE("rel_mul is commutative, associative and respects dimension") {
  int supported = 0;
  for (const auto& a : rel_basis()) {
    for (const auto& b : rel_basis()) {
      const auto ab = attempt([&] { return rel_mul(RelCycle(a), RelCycle(b)); });
      const auto ba = attempt([&] { return rel_mul(RelCycle(b), RelCycle(a)); });
      CHECK(ab.has_value() == ba.has_value());
      if (!ab) continue;
      CHECK(*ab == *ba);
      const int want = dimension(a) + dimension(b) - 3;
      for (const auto& [k, coef] : ab->terms()) CHECK(dimension(k) == want);
      if (want < 0) CHECK(ab->is_zero());
      for (const auto& e : rel_basis()) {
        const auto l = attempt([&] { return rel_mul(*ab, RelCycle(e)); });
        const auto r = attempt([&] {
          return rel_mul(RelCycle(a), rel_mul(RelCycle(b), RelCycle(e)));
        });
        if (l && r) {
          CHECK(*l == *r);
          ++supported;
        }
      }
    }
  }
  CHECK(supported > 500);
}

TEST_CASE("composition rules do not depend on the chosen representative") {
  for (Bv a : bv_basis())
    for (Bv b : bv_basis()) {
      const Corr u = Corr::of(pp(a, b));
      for (auto dir : {Direction::forward, Direction::inverse}) {
        const Corr k = dir == Direction::forward ? Corr::F() : Corr::Finv();
        CHECK(compose(u, k) == Corr::of(rules::pair_after_fourier(a, b, dir)));
        CHECK(compose(k, u) == Corr::of(rules::fourier_after_pair(dir, a, b)));
      }
      for (Bv x : bv_basis())
        for (Bv y : bv_basis()) {
          CHECK(compose(Corr::of(pp(x, y)), u) == Corr::of(rules::pair_after_pair(x, y, a, b)));
        }
    }
}

TEST_CASE("composition is associative with [Delta] as identity") {
  const auto basis = corr_basis();
  const Corr d = Corr::of(rel_diagonal());
  for (const auto& u : basis) {
    CHECK(compose(d, u) == u);
    CHECK(compose(u, d) == u);
  }
  int supported = 0, skipped = 0;
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& e : basis) {
        const auto l = attempt([&] { return compose(compose(a, b), e); });
        const auto r = attempt([&] { return compose(a, compose(b, e)); });
        if (l && r) {
          CHECK(*l == *r);
          ++supported;
        } else {
          ++skipped;
        }
      }
  CHECK(supported > 1000);
  MESSAGE("associativity: " << supported << " supported triples, " << skipped << " outside the model");
}

TEST_CASE("composition dimension bookkeeping") {
  for (const auto& a : rel_basis())
    for (const auto& b : rel_basis()) {
      const RelCycle r = compose(Corr::of(RelCycle(a)), Corr::of(RelCycle(b))).cycle;
      const int want = dimension(a) + dimension(b) - 2;
      for (const auto& [k, coef] : r.terms()) CHECK(dimension(k) == want);
      if (want > 3 || want < 0) CHECK(r.is_zero());
    }
  CHECK(compose(Corr::of(rel_unit()), Corr::of(rel_unit())).is_zero());
  CHECK(key_dim(rel_unit()) == 3);
}

TEST_CASE("Fourier kernel compositions") {
  CHECK(compose(Corr::Finv(), Corr::F()) == Corr::of(rel_diagonal()));
  CHECK_THROWS_AS(compose(Corr::F(), Corr::F()), OutsideModel);
  CHECK(compose(Corr::of(rel_unit()), Corr::F()) == Corr::of(p1(bv_fourier(one, Direction::forward))));
  const Corr e = Corr::of(pp(th, th));
  const auto Fth = bv_fourier(th, Direction::forward), Fith = bv_fourier(th, Direction::inverse);
  CHECK(compose(Corr::Finv(), compose(e, Corr::F())) == Corr::of(pp(Fth, Fith)));
  // hand computation: p1*([S] - f).p2*(-[S] - f) = -[SxS] - F + F
  CHECK(pp(one - f, -one - f) == -rel_unit());
}

TEST_CASE("projectors and the motivic triple") {
  const auto p = build_projectors();
  CHECK(compose(p.p0, p.p0) == p.p0);
  CHECK(compose(p.p0, p.p2).is_zero());
  CHECK(compose(p.p1, p.p1) == p.p1);
  CHECK(p.p0 + p.p1 + p.p2 == Corr::of(rel_diagonal()));
  const auto m = build_motivic_sl2();
  CHECK(m.h0 == Corr::of(p2(th) - p1(th)));
  CHECK(m.h0.cycle.str() == "-p1*s + p2*s");
  CHECK(commutator(m.h0, m.e0) == Rational(2) * m.e0);
  CHECK(compose(m.h0, p.p0) == -p.p0);
  CHECK(commutator(m.e0, m.e0).is_zero());
}

TEST_CASE("multiplicativity reduces to the relbv axiom") {
  const auto r = reduce_multiplicativity();
  CHECK(r.lambda == Rational(1));
  CHECK(r.residual.is_zero());
  CHECK(!relbv_lhs().is_zero());
  CHECK(relbv_lhs().str() ==
        "q1*s.q2*s + q1*s.q3*s + q2*s.q3*s - q3*s.q12*[Delta] - q2*s.q13*[Delta] - q1*s.q23*[Delta] + [Delta^sm]");
  CHECK(triple_mul(q(1, 2, rel_diagonal()), q(1, 3, rel_diagonal())) == small_diagonal());
  CHECK_THROWS_AS(triple_mul(q(1, 2, rel_diagonal()), q(1, 2, rel_diagonal())), OutsideModel);
  // restricting q_ij^*[Delta] to slot i: q12^*[Delta].q1^*s = q1^*s q2^*s
  CHECK(triple_mul(q(1, 2, rel_diagonal()), q(1, s)) == triple_mul(q(1, s), q(2, s)));
  CHECK(triple_mul(q(1, 2, rel_diagonal()), q(2, s)) == triple_mul(q(1, s), q(2, s)));
}

TEST_CASE("absolute pushforward") {
  const AbsCycle u = absolute_push(rel_unit());
  CHECK(u.str() == "p2'*f + p1'*f");
  // every pair presenting a basis element pushes the same way
  const AbsCycle locus = abs_mono(2, {Bv::f, Bv::one, Bv::one}) + abs_mono(2, {Bv::one, Bv::f, Bv::one});
  for (Bv a : bv_basis())
    for (Bv b : bv_basis()) CHECK(absolute_push(pp(a, b)) == abs_mul(abs_mono(2, {a, b, Bv::one}), locus));
  CHECK(absolute_push(rel_diagonal()) == abs_diagonal(2, 1, 2));
  CHECK(absolute_push(relbv_lhs()) == bv_absolute_relation());
  CHECK(absolute_push(triple_mul(q(2, s), q(3, s))).terms().size() == 3);
}

TEST_CASE("k3 suite is green and fast") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = verify_k3_motive();
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& r : reports) {
    INFO(r.check << ": " << r.witness);
    CHECK(r.ok());
  }
  CHECK(reports.size() >= 20);
  CHECK(ms < 1000);
}
