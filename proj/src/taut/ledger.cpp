#include "beauville/taut/ledger.hpp"

namespace beauville {

std::string axiom_statement(Axiom a) {
  switch (a) {
    case Axiom::delta_cube_g3: return "delta^3 = 0 on M_3^{<=1} (cited)";
    case Axiom::delta_cube_g2: return "delta^3 = 0 on M_2^int (cited)";
    case Axiom::delta_square_g2: return "delta^2 = -(1/6) r_*[M04\\D] on M_2^int (cited)";
    case Axiom::excess_self_intersection: return "iota^* delta = -(psi1 + psi2), excess intersection";
    case Axiom::psi_sum_g2:
      return "iota_*(psi1 + psi2) = (1/12) r_*[M04\\D] on M_2^int, from psi_i = delta_irr/12 on M_{1,2}";
    case Axiom::psi_square_nonzero: return "(psi1 + psi2)^2 != 0 on M_{g-1,2} for g >= 4 (top intersection numbers)";
    case Axiom::psi_sum_nonzero_m22: return "psi1 + psi2 != 0 in H^2(M_{2,2})";
    case Axiom::h3_m3_vanishes: return "H^3(M_3) = 0 (cited)";
    case Axiom::r_nonzero: return "r_*[M04\\D] != 0 in H^4(M_2^int)";
    case Axiom::delta_nonzero: return "delta != 0 in H^2 of the base";
    case Axiom::h2_jg_span: return "H^2(J_g) is spanned by theta and kappa1";
    case Axiom::boundary_irreducible: return "the boundary of M_g^{<=1} is irreducible";
    case Axiom::unit_section: return "pi_*(theta^n/n!) = 1 on an abelian fibration of relative dimension n";
    case Axiom::dr_relation: return "universal double ramification relation P_g^{g+1} = 0 (cited)";
    case Axiom::dr_leading_poly: return "f_{g-1,0,0}(d) = -d^4/48 + d^2/24 - 1/240 (input)";
    case Axiom::alpha_weight2_g3: return "alpha_(2) = (1/480) theta (psi1 + psi2) - (1/8960) xi2^2 on J_{2,2} (input)";
    case Axiom::alpha_weight0_g2: return "alpha_(0) = (1/480)(psi1 + psi2) on J_{1,2} (input)";
    case Axiom::xi_relation_g3: return "2 theta xi2^2 = -theta^2 (psi1 + psi2) on J_{2,2} (cited)";
  }
  return "?";
}

std::vector<std::string> AssumptionLedger::statements() const {
  std::vector<std::string> out;
  for (Axiom a : used_) out.push_back(axiom_statement(a));
  return out;
}

}  // namespace beauville
