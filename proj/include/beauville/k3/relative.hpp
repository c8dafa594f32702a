#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "beauville/k3/bv.hpp"
#include "beauville/k3/formal.hpp"

namespace beauville {

// ---------------------------------------------------------------------------
// S x_B S.
//
// Since p1^*f = p2^*f =: F, every product p1^*a p2^*b of BV classes is
// prod_{i in T} p_i^*s * F^e for a slot set T and e in {0, 1}:
//   [SxS] = (), p1*s = ({1}), F = (e=1), p1*c = ({1}, e=1),
//   p1*s.p2*s = ({1,2}), z = ({1,2}, e=1) = p1*s.p2*c = p1*c.p2*s.
// Together with the relative diagonal this gives a 9 element basis.

struct RelKey {
  bool diag = false;
  unsigned t = 0;  // bit i-1: factor p_i^*s
  int e = 0;       // power of F
  auto operator<=>(const RelKey&) const = default;
};

std::string key_name(const RelKey& k);
int dimension(const RelKey& k);
const std::vector<RelKey>& rel_basis();

using RelCycle = Formal<RelKey>;

RelCycle rel_unit();      // [S x_B S]
RelCycle rel_diagonal();  // [Delta]
RelCycle rel_fiber();     // F

/// p1^*a . p2^*b
RelCycle pp(const BvClass& a, const BvClass& b);
RelCycle p1(const BvClass& a);
RelCycle p2(const BvClass& b);

/// Delta_* on 1, s, f; Delta_* c is outside the model.
RelCycle diag_push(const BvClass& x);

/// Intersection product. [Delta] . p_i^*x = Delta_* x; [Delta].[Delta] is
/// outside the model.
RelCycle rel_mul(const RelCycle& u, const RelCycle& v);

/// The representative (a, b) with pp(a, b) = basis element, F on slot 1.
std::pair<Bv, Bv> representative(const RelKey& k);

/// Relative correspondence: a cycle plus multiples of the Fourier kernel and
/// its inverse, which are only removed through composition rules.
struct Corr {
  RelCycle cycle;
  Rational fourier;
  Rational inverse;

  static Corr of(const RelCycle& c) { return {c, Rational(0), Rational(0)}; }
  static Corr F() { return {RelCycle(), Rational(1), Rational(0)}; }
  static Corr Finv() { return {RelCycle(), Rational(0), Rational(1)}; }

  bool is_zero() const { return cycle.is_zero() && fourier.is_zero() && inverse.is_zero(); }
  std::string str() const;

  Corr operator-() const { return {-cycle, -fourier, -inverse}; }
  friend Corr operator+(const Corr& a, const Corr& b) {
    return {a.cycle + b.cycle, a.fourier + b.fourier, a.inverse + b.inverse};
  }
  friend Corr operator-(const Corr& a, const Corr& b) { return a + (-b); }
  friend Corr operator*(const Rational& k, const Corr& a) { return {k * a.cycle, k * a.fourier, k * a.inverse}; }
  friend bool operator==(const Corr& a, const Corr& b) = default;
};

/// v o u (apply u first).
Corr compose(const Corr& v, const Corr& u);
Corr commutator(const Corr& a, const Corr& b);

/// Rules on BV pairs, exposed so that representative independence can be
/// tested against every pair presenting a basis element.
namespace rules {
/// (p1^*c.p2^*d) o (p1^*a.p2^*b) = p1^*a.p2^*d . pi^*pi_*(b c)
RelCycle pair_after_pair(Bv c, Bv d, Bv a, Bv b);
/// (p1^*a.p2^*b) o F^{+-1} = p1^*F^{+-1}(a).p2^*b
RelCycle pair_after_fourier(Bv a, Bv b, Direction dir);
/// F^{+-1} o (p1^*a.p2^*b) = p1^*a.p2^*F^{+-1}(b)
RelCycle fourier_after_pair(Direction dir, Bv a, Bv b);
}  // namespace rules

struct Projectors {
  Corr p0, p1, p2;
};
/// p0 = p1^*Theta, p2 = p2^*Theta, p1 = [Delta] - p0 - p2.
Projectors build_projectors();

struct MotivicTriple {
  Corr e0, h0, f0;
};
/// e0 = Delta_* Theta, f0 = [S x_B S], h0 = [e0, f0].
MotivicTriple build_motivic_sl2();

// ---------------------------------------------------------------------------
// S x_B S x_B S.
//
// Monomials prod_{i in T} q_i^*s * F^e as above, optionally times one
// q_ij^*[Delta] (only with classes on the remaining slot and no F), or the
// small diagonal alone.

enum class TriTag { none, d12, d13, d23, small };

struct TriKey {
  TriTag tag = TriTag::none;
  unsigned t = 0;
  int e = 0;
  auto operator<=>(const TriKey&) const = default;
};

std::string key_name(const TriKey& k);
int dimension(const TriKey& k);

using TripleCycle = Formal<TriKey>;

TripleCycle q(int i, const BvClass& x);
/// q_ij^* of a relative cycle: slot 1 -> i, slot 2 -> j.
TripleCycle q(int i, int j, const RelCycle& u);
TripleCycle small_diagonal();
TripleCycle triple_mul(const TripleCycle& x, const TripleCycle& y);

/// [Delta^sm] o (u x v) = q13^*u . q23^*v
TripleCycle small_diag_after(const RelCycle& u, const RelCycle& v);
/// u o [Delta^sm] = q12^*[Delta] . q13^*u
TripleCycle after_small_diag(const RelCycle& u);

/// [Delta^sm] - (q1^*s q23^*[Delta] + perms) + (q2^*s q3^*s + perms)
TripleCycle relbv_lhs();

// ---------------------------------------------------------------------------
// Absolute products S x S and S x S x S. Slots carry independent BV classes.

enum class AbsTag { none, d12, d13, d23, small };

struct AbsKey {
  int n = 2;  // number of factors
  AbsTag tag = AbsTag::none;
  std::array<Bv, 3> slot{Bv::one, Bv::one, Bv::one};
  auto operator<=>(const AbsKey&) const = default;
};

std::string key_name(const AbsKey& k);

using AbsCycle = Formal<AbsKey>;

/// Pullback of a product of classes, one per factor.
AbsCycle abs_mono(int n, std::array<Bv, 3> slot, const Rational& k = Rational(1));
AbsCycle abs_diagonal(int n, int i, int j);
AbsCycle abs_small_diagonal();
/// Products needed for the pushforward: slotwise BV products, and
/// Delta_{S*} f = p1'^*c p2'^*f + p1'^*f p2'^*c on a diagonal factor.
AbsCycle abs_mul(const AbsCycle& x, const AbsCycle& y);

/// Pushforward along S x_B S -> S x S, using [S x_B S] = p1'^*f + p2'^*f.
AbsCycle absolute_push(const RelCycle& u);
/// Pushforward along S x_B S x_B S -> S^3.
AbsCycle absolute_push(const TripleCycle& u);

/// [Delta_S^sm] - (q1'^*c q23'^*[Delta_S] + perms) + (q2'^*c q3'^*c + perms)
AbsCycle bv_absolute_relation();

}  // namespace beauville
