#pragma once

#include <map>
#include <vector>

#include "beauville/taut/expr.hpp"
#include "beauville/taut/ledger.hpp"

namespace beauville {

/// A relation on the boundary Jacobian: any monomial divisible by pattern
/// may have pattern replaced by replacement.
struct BoundaryRule {
  Axiom axiom;
  Mono pattern;
  TautExpr replacement;
};

/// Everything the pushforward may use. The ledger collects what it did use.
struct PushContext {
  int genus = 2;
  /// theta^{g+1}/(g+1)! = leading iota_*(theta'^{g-1}/(g-1)!) + iota_* alpha
  Rational leading;
  /// Known weight pieces of alpha on J_{g-1,2}; all others are unknown.
  std::map<int, TautExpr> alpha;
  std::map<int, Axiom> alpha_axioms;
  std::vector<BoundaryRule> rules;
  AssumptionLedger ledger;
};

/// Context with the leading coefficient extracted from the DR relation.
PushContext push_context(int g);

/// The known part of theta^{g+1}/(g+1)! as a boundary class on the total
/// space: leading * iota_*(theta'^{g-1}/(g-1)!) + iota_*(alpha, known pieces).
TautExpr top_theta_relation(PushContext& ctx);

/// pi_* to the base. On J_g and J_{g-1,2} only weight 2n survives and
/// theta^n/n! . u goes to u. On the compactified total space theta^k with
/// k > g is first rewritten through the top theta relation; iota_*[M_{g-1,2}]
/// is reported as delta. Unknown alpha pieces that could contribute, or a
/// weight 2n monomial with xi2 and no rule, raise OutsideModel.
TautExpr abelian_push(const TautExpr& x, PushContext& ctx);

}  // namespace beauville
