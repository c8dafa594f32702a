#pragma once

#include <array>
#include <map>
#include <string>

#include "beauville/exact/poly.hpp"

namespace beauville {

enum class TautGen { theta, psi1, psi2, xi2, kappa1, delta };
constexpr int kTautGens = 6;
const char* taut_gen_name(TautGen g);

/// Where a class lives. Genus g always refers to the ambient curve family;
/// the boundary Jacobian is J_{g-1,2} over M_{g-1,2}.
enum class Locus {
  total,          // compactified Jacobian over curves with <= 1 node (or integral, g = 2)
  open,           // J_g over M_g
  boundary,       // J_{g-1,2}
  base,           // the moduli base of the total space
  boundary_base,  // M_{g-1,2}
};
const char* locus_name(Locus l);

/// Boundary partner: total -> boundary, base -> boundary_base.
Locus boundary_of(Locus l);
/// Relative dimension of a Jacobian locus.
int relative_dim(Locus l, int g);
bool allows(Locus l, TautGen g);

using Mono = std::array<int, kTautGens>;

/// own: a monomial on the locus itself. pushed: iota_* of a monomial on the
/// boundary partner. deep: r_*[M_{0,4} \ D] on the genus 2 base.
enum class Stratum { own, pushed, deep };

struct TautTerm {
  Stratum stratum = Stratum::own;
  Mono mono{};
  auto operator<=>(const TautTerm&) const = default;
};

int weight(const Mono& m);  // wt theta = 2, wt xi2 = 1

/// Polynomial in theta, psi_i, xi2, kappa1, delta with coefficients in
/// Q[b] (or Q[a]), plus pushforwards from the boundary.
class TautExpr {
 public:
  TautExpr(Locus l, int g) : locus_(l), genus_(g) {}

  static TautExpr scalar(Locus l, int g, const RatPoly& c);
  static TautExpr gen(Locus l, int g, TautGen x);
  static TautExpr monomial(Locus l, int g, const Mono& m, const RatPoly& c = RatPoly(1));
  /// iota_* x for x on a boundary locus.
  static TautExpr push_from(const TautExpr& inner);
  static TautExpr deep(int g, const RatPoly& c);

  Locus locus() const { return locus_; }
  int genus() const { return genus_; }
  const std::map<TautTerm, RatPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TautExpr own() const;
  /// The class x with iota_* x equal to the pushed part.
  TautExpr pushed_inner() const;
  RatPoly deep_coeff() const;

  void add(const TautTerm& t, const RatPoly& c);

  TautExpr operator-() const;
  TautExpr& operator+=(const TautExpr& o);
  TautExpr& operator-=(const TautExpr& o);
  friend TautExpr operator+(TautExpr a, const TautExpr& b) { return a += b; }
  friend TautExpr operator-(TautExpr a, const TautExpr& b) { return a -= b; }
  friend TautExpr operator*(const RatPoly& k, const TautExpr& x);
  /// Projection formula for own * pushed; pushed * pushed and anything times
  /// the deep stratum are outside the model.
  friend TautExpr operator*(const TautExpr& x, const TautExpr& y);
  friend bool operator==(const TautExpr& a, const TautExpr& b);

  std::string str() const;

 private:
  void require_compatible(const TautExpr& o) const;

  Locus locus_;
  int genus_;
  std::map<TautTerm, RatPoly> terms_;
};

TautExpr pow(const TautExpr& x, unsigned k);

/// Part of [N]-weight w.
TautExpr weight_part(const TautExpr& x, int w);
/// [N]^* x = sum_w N^w x_w, as the map w -> x_w.
std::map<int, TautExpr> n_weight(const TautExpr& x);

/// t^* eps^* iota^*: theta -> theta + (psi1+psi2)/2, delta -> -(psi1+psi2)
/// (excess intersection). Total -> boundary, base -> boundary_base.
TautExpr boundary_pull(const TautExpr& x);
/// Restriction to the smooth locus: delta -> 0. Total -> open.
TautExpr restrict_open(const TautExpr& x);

/// psi1 + psi2 on a boundary locus.
TautExpr psi_sum(Locus l, int g);

/// If x = p * unit for a polynomial p, returns true and sets p.
bool factor_through(const TautExpr& x, const TautExpr& unit, RatPoly& p);

}  // namespace beauville
