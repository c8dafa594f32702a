#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beauville/exact/poly.hpp"
#include "beauville/taut/expr.hpp"

namespace beauville {

/// An integer a*g + b, so exponent bookkeeping can be done for every genus
/// at once.
struct GenusAffine {
  int per_g = 0;
  int constant = 0;

  bool is_constant() const { return per_g == 0; }
  int at(int g) const { return per_g * g + constant; }
  std::string str() const;
  friend GenusAffine operator+(GenusAffine a, GenusAffine b) { return {a.per_g + b.per_g, a.constant + b.constant}; }
  friend GenusAffine operator-(GenusAffine a, GenusAffine b) { return {a.per_g - b.per_g, a.constant - b.constant}; }
  friend GenusAffine operator*(int k, GenusAffine a) { return {k * a.per_g, k * a.constant}; }
  friend bool operator==(GenusAffine, GenusAffine) = default;
};

/// One family of terms of the DR cycle in degree g+1:
///   leading:  theta^{g+1}/(g+1)!
///   smooth:   cst * theta^a i_*((psi_h + psi_h')^b), a + b = g, here b = j
///   two_edge: f_{k,l,m}(d) theta^k i^d_*((psi_h1+psi_h1')^l (psi_h2+psi_h2')^m),
///             k + l + m = g - 1, here l + m = j
struct DrFamily {
  enum class Kind { leading, smooth, two_edge };
  Kind kind = Kind::leading;
  int j = 0;
  int l = 0;
  int m = 0;
  /// Only f_{g-1,0,0} is known explicitly; every other f is an opaque
  /// polynomial of degree <= 2(l+m+2).
  std::optional<RatPoly> f;

  GenusAffine theta_power() const;
  int degree_bound() const { return 2 * (l + m + 2); }
  std::string str() const;
};

struct DrRelationShape {
  std::vector<DrFamily> families;
};

/// The shape with smooth families b <= max_j, two-edge families with
/// l + m <= max_j, and f_{g-1,0,0}(d) = -d^4/48 + d^2/24 - 1/240.
DrRelationShape dr_shape(int max_j);
/// Raises InvalidArgument on a malformed shape.
void validate(const DrRelationShape& shape);

RatPoly dr_leading_poly();

struct DrContribution {
  std::string family;
  GenusAffine n_power;   // exponent of N coming from theta^{power}
  GenusAffine needed;    // 2g + 2 - n_power: degree needed from f(Nd)
  bool vanishes = false; // killed for weight reasons
  bool opaque = false;   // coefficient is the leading coefficient of an unknown f
  RatPoly coefficient;   // in d, when explicit
};

struct DrExtraction {
  std::vector<DrContribution> contributions;
  Rational theta_coefficient;  // of theta^{g+1}/(g+1)!
  Rational at_plus;            // coefficient of the leading boundary term, d = 1
  Rational at_minus;           // d = -1
  /// theta^{g+1}/(g+1)! = leading * iota_*(theta'^{g-1}/(g-1)!) + iota_*(other terms)
  Rational leading;
  /// Largest [N]-weight among the other terms for the given genus.
  int other_max_weight = -1;
};

/// Coefficient of N^{2g+2} in [N]^* P_g^{g+1}. The degree bookkeeping is
/// genus-free; g is used only to list the other terms.
DrExtraction extract_dr_coefficient(const DrRelationShape& shape, int g);

/// At the unstable genus 0 vertex: psi_h2' = -psi_h1' = xi_h1' - xi_h2'.
struct PsiBridge {
  TautExpr psi_h1p;
  TautExpr psi_h2p;
};
PsiBridge psi_bridge_relation(const TautExpr& xi_h1p, const TautExpr& xi_h2p);
/// With xi_h1' = 0 and xi_h2' = xi2 on J_{g-1,2}.
PsiBridge psi_bridge_relation(int g);

/// theta'^k (psi1 + psi_h1')^l (psi2 + psi_h2')^m on J_{g-1,2}, with
/// theta' = theta + (psi1+psi2)/2 and psi_h' from the bridge.
TautExpr other_term(int g, int k, int l, int m);

}  // namespace beauville
