#include "beauville/taut/dr.hpp"

#include <algorithm>

#include "beauville/error.hpp"

namespace beauville {

std::string GenusAffine::str() const {
  if (per_g == 0) return std::to_string(constant);
  std::string out = per_g == 1 ? "g" : std::to_string(per_g) + "g";
  if (constant > 0) out += " + " + std::to_string(constant);
  if (constant < 0) out += " - " + std::to_string(-constant);
  return out;
}

GenusAffine DrFamily::theta_power() const {
  switch (kind) {
    case Kind::leading: return {1, 1};
    case Kind::smooth: return {1, -j};
    case Kind::two_edge: return {1, -1 - j};
  }
  return {};
}

std::string DrFamily::str() const {
  switch (kind) {
    case Kind::leading: return "theta^{g+1}/(g+1)!";
    case Kind::smooth: return "cst*theta^{" + theta_power().str() + "} i_*((psi_h+psi_h')^" + std::to_string(j) + ")";
    case Kind::two_edge:
      return "f_{" + theta_power().str() + "," + std::to_string(l) + "," + std::to_string(m) + "}(d)*theta^{" +
             theta_power().str() + "} i^d_*(" + std::to_string(l) + "," + std::to_string(m) + ")";
  }
  return "?";
}

RatPoly dr_leading_poly() {
  const RatPoly d = RatPoly::x(Var::d);
  return RatPoly(Rational(-1, 48)) * d * d * d * d + RatPoly(Rational(1, 24)) * d * d - RatPoly(Rational(1, 240));
}

DrRelationShape dr_shape(int max_j) {
  DrRelationShape s;
  s.families.push_back({DrFamily::Kind::leading, 0, 0, 0, std::nullopt});
  for (int j = 0; j <= max_j; ++j) s.families.push_back({DrFamily::Kind::smooth, j, 0, 0, std::nullopt});
  for (int j = 0; j <= max_j; ++j) {
    for (int l = 0; l <= j; ++l) {
      DrFamily f{DrFamily::Kind::two_edge, j, l, j - l, std::nullopt};
      if (j == 0) f.f = dr_leading_poly();
      s.families.push_back(f);
    }
  }
  return s;
}

void validate(const DrRelationShape& shape) {
  int leading = 0;
  for (const auto& f : shape.families) {
    if (f.j < 0 || f.l < 0 || f.m < 0) throw InvalidArgument("negative index in " + f.str());
    switch (f.kind) {
      case DrFamily::Kind::leading:
        ++leading;
        if (f.f) throw InvalidArgument("the leading term has no polynomial");
        break;
      case DrFamily::Kind::smooth:
        if (f.f) throw InvalidArgument("smooth boundary terms carry cst, not f(d)");
        break;
      case DrFamily::Kind::two_edge:
        if (f.l + f.m != f.j) throw InvalidArgument("l + m must equal j in " + f.str());
        if (f.f && f.f->degree() > f.degree_bound()) throw InvalidArgument("degree bound exceeded in " + f.str());
        if (f.f && f.f->variable() != Var::d && !f.f->is_constant()) throw InvalidArgument("f must be a polynomial in d");
        break;
    }
  }
  if (leading != 1) throw InvalidArgument("exactly one leading term expected");
}

DrExtraction extract_dr_coefficient(const DrRelationShape& shape, int g) {
  validate(shape);
  if (g < 2) throw InvalidArgument("genus must be at least 2");
  const GenusAffine target{2, 2};
  DrExtraction out;
  bool have_lead = false;
  for (const auto& fam : shape.families) {
    DrContribution c;
    c.family = fam.str();
    c.n_power = 2 * fam.theta_power();
    c.needed = target - c.n_power;
    if (!c.needed.is_constant()) throw InvalidArgument("exponent bookkeeping depends on g for " + c.family);
    const int need = c.needed.constant;
    switch (fam.kind) {
      case DrFamily::Kind::leading:
        c.coefficient = need == 0 ? RatPoly(1) : RatPoly();
        out.theta_coefficient = c.coefficient.coeff(0);
        break;
      case DrFamily::Kind::smooth:
        // cst does not depend on N
        c.vanishes = need != 0;
        break;
      case DrFamily::Kind::two_edge:
        if (need > fam.degree_bound()) {
          c.vanishes = true;
        } else if (fam.f) {
          c.coefficient = poly_coeff(scale_argument(*fam.f, Var::N), need);
          c.vanishes = c.coefficient.is_zero();
          if (fam.j == 0) {
            out.at_plus = c.coefficient.eval(Rational(1));
            out.at_minus = c.coefficient.eval(Rational(-1));
            have_lead = true;
          }
        } else {
          c.opaque = true;
          const int k = fam.theta_power().at(g);
          if (k >= 0) {
            const TautExpr t = other_term(g, k, fam.l, fam.m);
            for (const auto& [w, part] : n_weight(t)) out.other_max_weight = std::max(out.other_max_weight, w);
          }
        }
        break;
    }
    out.contributions.push_back(c);
  }
  if (!have_lead) throw InvalidArgument("f_{g-1,0,0} must be given");
  if (out.at_plus != out.at_minus) throw InvalidArgument("leading coefficient depends on the sign of d");
  // P = theta^{g+1}/(g+1)! + c(d) theta^{g-1}/(g-1)! i^d_*(1) + ... = 0
  out.leading = -out.at_plus / out.theta_coefficient;
  return out;
}

PsiBridge psi_bridge_relation(const TautExpr& xi_h1p, const TautExpr& xi_h2p) {
  const TautExpr h2 = xi_h1p - xi_h2p;
  return {-h2, h2};
}

PsiBridge psi_bridge_relation(int g) {
  return psi_bridge_relation(TautExpr(Locus::boundary, g), TautExpr::gen(Locus::boundary, g, TautGen::xi2));
}

TautExpr other_term(int g, int k, int l, int m) {
  const Locus B = Locus::boundary;
  const PsiBridge br = psi_bridge_relation(g);
  const TautExpr theta_p = TautExpr::gen(B, g, TautGen::theta) + Rational(1, 2) * psi_sum(B, g);
  const TautExpr e1 = TautExpr::gen(B, g, TautGen::psi1) + br.psi_h1p;
  const TautExpr e2 = TautExpr::gen(B, g, TautGen::psi2) + br.psi_h2p;
  return pow(theta_p, k) * pow(e1, l) * pow(e2, m);
}

}  // namespace beauville
