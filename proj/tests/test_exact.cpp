#include <random>
#include <set>

#include "beauville/error.hpp"
#include "beauville/exact/gaussian_rational.hpp"
#include "beauville/exact/linalg.hpp"
#include "beauville/exact/matrix.hpp"
#include "beauville/exact/poly.hpp"
#include "beauville/exact/roots.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace beauville;
using G = GaussianRational;
using M = SparseMat<G>;

TEST_CASE("rational normal form") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(6, -4).den() == 2);
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/-2"), InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("x"), InvalidArgument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("gaussian arithmetic") {
  const G i = G::i();
  CHECK(G(1) + i == G(Rational(1), Rational(1)));
  CHECK((G(1) + i) * (G(1) - i) == G(2));
  CHECK(i * i == G(-1));
  const G half(Rational(1, 2), Rational(1, 2));
  CHECK(half * half == G(Rational(0), Rational(1, 2)));
  CHECK_THROWS_AS(G(3) / G(0), DivisionByZero);
  CHECK(((G(1) + i) / (G(1) + i)) == G(1));
  CHECK((G(2) + i).conj().conj() == G(2) + i);
}

TEST_CASE("gaussian print and parse") {
  CHECK(G(0).str() == "0");
  CHECK(G(Rational(3, 4)).str() == "3/4");
  CHECK(G::i().str() == "i");
  CHECK((-G::i()).str() == "-i");
  CHECK(G(Rational(0), Rational(1, 2)).str() == "1/2*i");
  CHECK(G(Rational(1, 2), Rational(1, 2)).str() == "1/2+1/2*i");
  CHECK(G(Rational(1), Rational(-1)).str() == "1-i");
  CHECK(G::parse(" -1/3 - 2/5*i ") == G(Rational(-1, 3), Rational(-2, 5)));
  CHECK_THROWS(G::parse("1+"));
  CHECK_THROWS(G::parse("1+2+3"));

  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    const G z = gen::gauss(rng);
    REQUIRE(G::parse(z.str()) == z);
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const G a = gen::gauss(rng), b = gen::gauss(rng), c = gen::gauss(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!a.is_zero()) CHECK(a * a.inverse() == G(1));
  }
}

TEST_CASE("bracket basics") {
  const M e = sparse_from<G>(2, 2, {{0, 1, G(1)}});
  const M f = sparse_from<G>(2, 2, {{1, 0, G(1)}});
  const M h = sparse_from<G>(2, 2, {{0, 0, G(1)}, {1, 1, G(-1)}});
  CHECK(mat_equal(mat_bracket(e, f), h));
  CHECK(is_zero(mat_bracket(e, e)));
  CHECK_THROWS_AS(mat_bracket(e, M(3, 3)), DimensionMismatch);
}

TEST_CASE("bracket antisymmetry and Jacobi") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 60; ++k) {
    const M a = gen::sparse(rng, 5, 8), b = gen::sparse(rng, 5, 8), c = gen::sparse(rng, 5, 8);
    CHECK(mat_equal(mat_bracket(a, b), mat_scale(G(-1), mat_bracket(b, a))));
    const M jac = mat_add(mat_add(mat_bracket(a, mat_bracket(b, c)), mat_bracket(b, mat_bracket(c, a))),
                          mat_bracket(c, mat_bracket(a, b)));
    CHECK(is_zero(jac));
  }
}

TEST_CASE("products agree with Eigen") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 40; ++k) {
    const M a = gen::sparse(rng, 6, 12), b = gen::sparse(rng, 6, 12);
    const M ab = a * b, ba = b * a;
    CHECK(mat_equal(mat_mul(a, b), ab));
    CHECK(mat_equal(mat_bracket(a, b), M(ab - ba)));
    CHECK(mat_mul(a, b).isCompressed());
  }
  const M r = sparse_from<G>(2, 3, {{0, 2, G(2)}, {1, 0, G(1)}});
  const M c = sparse_from<G>(3, 1, {{2, 0, G(3)}});
  CHECK(mat_equal(mat_mul(r, c), sparse_from<G>(2, 1, {{0, 0, G(6)}})));
}

TEST_CASE("poly coefficients") {
  const RatPoly n = RatPoly::x(Var::N);
  const RatPoly p = (n * n + RatPoly(3)) * (n * n + RatPoly(3));
  CHECK(poly_coeff(p, 4) == Rational(1));
  CHECK(poly_coeff(p, 2) == Rational(6));
  CHECK(poly_coeff(RatPoly(), 5) == Rational(0));
  CHECK(p.str() == "9 + 6*N^2 + N^4");

  const RatPoly d = RatPoly::x(Var::d);
  const RatPoly f = RatPoly::monomial(Var::d, 4, Rational(-1, 48)) +
                    RatPoly::monomial(Var::d, 2, Rational(1, 24)) + RatPoly(Rational(-1, 240));
  const BivPoly fn = scale_argument(f, Var::N);
  CHECK(poly_coeff(fn, 4) == RatPoly::monomial(Var::d, 4, Rational(-1, 48)));
  CHECK(poly_coeff(fn, 3).is_zero());
  CHECK(fn.eval(RatPoly(1)) == f);
  CHECK_THROWS_AS(n + d, InvalidArgument);
}

namespace {

// Rational root theorem over the integer-cleared polynomial.
std::set<Rational> brute_roots(const RatPoly& p) {
  mpz_class l = 1;
  for (const auto& [k, c] : p.terms()) l = lcm(l, c.den());
  std::vector<mpz_class> z;
  for (int k = 0; k <= p.degree(); ++k) z.push_back((p.coeff(k) * Rational(l)).num());
  int low = 0;
  while (z[low] == 0) ++low;
  std::set<Rational> out;
  if (low > 0) out.insert(Rational(0));
  auto divisors = [](mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> ds;
    for (mpz_class q = 1; q <= v; ++q) {
      if (v % q == 0) ds.push_back(q);
    }
    return ds;
  };
  for (const auto& a : divisors(z[low])) {
    for (const auto& b : divisors(z.back())) {
      for (int s : {1, -1}) {
        const Rational x(mpz_class(s * a), b);
        if (p.eval(x).is_zero()) out.insert(x);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("rational roots of quadratics") {
  const RatPoly b = RatPoly::x(Var::b);
  const auto r = rational_roots(b * b - RatPoly(1));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Rational(-1));
  CHECK(r[1] == Rational(1));

  const RatPoly g3 = RatPoly(Rational(191, 224)) - RatPoly(2) * b - RatPoly(36) * b * b;
  const auto c3 = discriminant_certificate(g3);
  CHECK(c3.discriminant == Rational(1775, 14));
  CHECK(c3.square_test == 24850);
  CHECK(157 * 157 < 24850);
  CHECK(24850 < 158 * 158);
  CHECK(rational_roots(g3).empty());
  CHECK(brute_roots(g3).empty());

  const RatPoly g2 = RatPoly(Rational(11, 960)) - RatPoly(Rational(1, 32)) * b - b * b;
  const auto c2 = discriminant_certificate(g2);
  CHECK(c2.discriminant == Rational(719, 15360));
  CHECK_FALSE(c2.is_square);
  CHECK(rational_roots(g2).empty());

  CHECK_THROWS_AS(rational_roots(b * b * b), OutsideModel);
  CHECK_THROWS_AS(rational_roots(RatPoly()), InvalidArgument);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    RatPoly p = RatPoly(gen::rational(rng, 6, 4)) + RatPoly(gen::rational(rng, 6, 4)) * b +
                RatPoly(gen::rational(rng, 6, 4)) * b * b;
    if (k % 3 == 0) {
      // force a rational root sometimes
      const Rational x = gen::rational(rng, 4, 3);
      p = (b - RatPoly(x)) * (RatPoly(gen::rational(rng, 4, 3)) * b + RatPoly(gen::rational(rng, 4, 3)));
    }
    if (p.is_zero() || p.degree() == 0) continue;
    const auto got = rational_roots(p);
    CHECK(std::set<Rational>(got.begin(), got.end()) == brute_roots(p));
  }
}

TEST_CASE("exact elimination") {
  DenseMat<G> a(3, 3);
  a << G(1), G(2), G(3), G(2), G(4), G(6), G(0), G(1), G::i();
  CHECK(rank(a) == 2);
  CHECK(kernel(a).cols() == 1);
  const DenseMat<G> k = kernel(a);
  CHECK(sparse_from<G>(DenseMat<G>(a * k)).nonZeros() == 0);

  DenseMat<G> m(2, 2);
  m << G(0), G(1), G(1), G(0);
  const auto cp = char_poly(m);
  CHECK(cp[0] == G(-1));
  CHECK(cp[1] == G(0));
  CHECK(cp[2] == G(1));
  const auto roots = integer_roots(cp);
  CHECK(roots == std::vector<long>{-1, 1});
}
