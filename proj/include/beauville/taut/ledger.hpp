#pragma once

#include <set>
#include <string>
#include <vector>

namespace beauville {

/// Literature facts and explicit inputs the tautological checks rely on.
enum class Axiom {
  delta_cube_g3,         // delta^3 = 0 on M_3 with <= 1 node
  delta_cube_g2,         // delta^3 = 0 on M_2^int
  delta_square_g2,       // delta^2 = -(1/6) r_*[M04 \ D] on M_2^int
  excess_self_intersection,  // iota^* delta = -(psi1 + psi2)
  psi_sum_g2,            // iota_*(psi1 + psi2) = (1/12) r_*[M04 \ D] on M_2^int
  psi_square_nonzero,    // (psi1 + psi2)^2 != 0 on M_{g-1,2}, g >= 4
  psi_sum_nonzero_m22,   // psi1 + psi2 != 0 on M_{2,2}
  h3_m3_vanishes,        // H^3(M_3) = 0
  r_nonzero,             // r_*[M04 \ D] != 0 on M_2^int
  delta_nonzero,         // delta != 0 in H^2
  h2_jg_span,            // H^2(J_g) spanned by theta and kappa1
  boundary_irreducible,  // the boundary of M_g^{<=1} is irreducible
  unit_section,          // theta^n/n! pushes to the unit on an abelian fibration
  dr_relation,           // vanishing of the universal DR cycle in degree g+1
  dr_leading_poly,       // f_{g-1,0,0}(d) = -d^4/48 + d^2/24 - 1/240
  alpha_weight2_g3,      // alpha_(2) on J_{2,2}
  alpha_weight0_g2,      // alpha_(0) on J_{1,2}
  xi_relation_g3,        // 2 theta xi2^2 = -theta^2 (psi1 + psi2) on J_{2,2}
};

std::string axiom_statement(Axiom a);

/// Records which axioms a computation consumed.
class AssumptionLedger {
 public:
  void use(Axiom a) { used_.insert(a); }
  bool uses(Axiom a) const { return used_.count(a) > 0; }
  const std::set<Axiom>& used() const { return used_; }
  std::vector<std::string> statements() const;
  void merge(const AssumptionLedger& o) { used_.insert(o.used_.begin(), o.used_.end()); }

 private:
  std::set<Axiom> used_;
};

}  // namespace beauville
