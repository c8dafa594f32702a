#pragma once

#include <vector>

#include "beauville/exact/roots.hpp"
#include "beauville/report.hpp"
#include "beauville/taut/dr.hpp"
#include "beauville/taut/push.hpp"

namespace beauville {

/// pi_*(theta^{g+1}/(g+1)!) on the base; (1/48) delta.
TautExpr top_theta_push(int g, AssumptionLedger& ledger);

/// Theta = theta + a kappa1 + b delta restricted to J_g.
struct OpenPart {
  TautExpr weight_part;  // weight 2g part of (theta + a kappa1)^{g+1}
  TautExpr pushed;       // its pushforward to M_g
  RatPoly factor;        // pushed = factor * kappa1
  AssumptionLedger ledger;
};
OpenPart open_part(int g);

struct GeFourResult {
  TautExpr weight_part;         // weight 2g-2 part of the pulled back Theta^{g+1}
  RatPoly boundary_poly;        // weight_part = boundary_poly * theta^{g-1} (psi1+psi2)^2
  std::vector<Rational> boundary_roots;
  TautExpr pushed;              // pi_*(Theta^{g+1}/(g+1)!)
  RatPoly push_poly;            // pushed = push_poly * delta
  std::vector<Rational> push_roots;
  bool contradiction = false;
  AssumptionLedger ledger;
};
GeFourResult genus_ge4_obstruction(int g);

/// Quadratic obstruction p(b) with pushed = p(b) * unit.
struct Obstruction {
  TautExpr pushed;
  TautExpr unit;
  RatPoly poly;
  DiscriminantCertificate certificate;
  std::vector<Rational> roots;
  AssumptionLedger ledger;
};
/// pi_*(theta Theta^4) on M_3^{<=1}, a multiple of iota_*(psi1 + psi2).
Obstruction genus3_obstruction();
/// pi_*(theta Theta^3) on M_2^int, a multiple of r_*[M04 \ D].
Obstruction genus2_obstruction();

/// On M_2^{<=1}, pi_*(Theta^3) = 0 determines b.
struct LeOneNode {
  TautExpr pushed;
  RatPoly poly;  // pushed = poly * delta
  std::vector<Rational> roots;
  AssumptionLedger ledger;
};
LeOneNode genus2_le1_theta();

/// theta^{g+1}/(g+1)! = (1/48) ... for every genus: exponent bookkeeping,
/// coefficient, and the pushforward for 2 <= g <= max_g.
std::vector<Report> verify_top_theta(int max_g);

/// The checks for one genus: 2, 3, or >= 4.
std::vector<Report> verify_theta_obstruction(int g);

}  // namespace beauville
