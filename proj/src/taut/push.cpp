#include "beauville/taut/push.hpp"

#include "beauville/error.hpp"
#include "beauville/taut/dr.hpp"

namespace beauville {

namespace {

constexpr int kTheta = static_cast<int>(TautGen::theta);
constexpr int kXi = static_cast<int>(TautGen::xi2);

bool divides(const Mono& p, const Mono& m) {
  for (int i = 0; i < kTautGens; ++i)
    if (p[i] > m[i]) return false;
  return true;
}

// Rewrite weight-2n monomials containing xi2 until none is left.
TautExpr apply_rules(const TautExpr& x, int n, PushContext& ctx) {
  TautExpr cur = x;
  for (int round = 0; round < 16; ++round) {
    TautExpr next(cur.locus(), cur.genus());
    bool changed = false;
    for (const auto& [t, c] : cur.terms()) {
      if (weight(t.mono) != 2 * n || t.mono[kXi] == 0) {
        next.add(t, c);
        continue;
      }
      const BoundaryRule* rule = nullptr;
      for (const auto& r : ctx.rules)
        if (divides(r.pattern, t.mono)) rule = &r;
      if (!rule) {
        throw OutsideModel("no relation for a weight " + std::to_string(2 * n) + " monomial with xi2: " +
                           TautExpr::monomial(cur.locus(), cur.genus(), t.mono).str());
      }
      Mono rest = t.mono;
      for (int i = 0; i < kTautGens; ++i) rest[i] -= rule->pattern[i];
      next += c * (TautExpr::monomial(cur.locus(), cur.genus(), rest) * rule->replacement);
      ctx.ledger.use(rule->axiom);
      changed = true;
    }
    cur = next;
    if (!changed) return cur;
  }
  throw OutsideModel("boundary relations do not terminate");
}

TautExpr push_abelian(const TautExpr& x, int n, Locus target, PushContext& ctx) {
  const TautExpr y = apply_rules(x, n, ctx);
  TautExpr out(target, x.genus());
  const Rational nf = factorial(n);
  for (const auto& [t, c] : y.terms()) {
    if (t.stratum != Stratum::own) throw OutsideModel("boundary classes on an abelian fibration");
    if (weight(t.mono) != 2 * n) continue;
    Mono rest = t.mono;
    rest[kTheta] = 0;
    out += TautExpr::monomial(target, x.genus(), rest, c * RatPoly(nf));
    ctx.ledger.use(Axiom::unit_section);
  }
  return out;
}

// iota_*[M_{g-1,2}] is delta by definition.
TautExpr with_delta(const TautExpr& x) {
  TautExpr out(x.locus(), x.genus());
  for (const auto& [t, c] : x.terms()) {
    if (t.stratum == Stratum::pushed && t.mono == Mono{}) {
      Mono d{};
      d[static_cast<int>(TautGen::delta)] = 1;
      out.add({Stratum::own, d}, c);
    } else {
      out.add(t, c);
    }
  }
  return out;
}

}  // namespace

PushContext push_context(int g) {
  PushContext ctx;
  ctx.genus = g;
  ctx.leading = extract_dr_coefficient(dr_shape(0), g).leading;
  return ctx;
}

TautExpr top_theta_relation(PushContext& ctx) {
  const int g = ctx.genus;
  const Locus B = Locus::boundary;
  const TautExpr theta_p = TautExpr::gen(B, g, TautGen::theta) + Rational(1, 2) * psi_sum(B, g);
  TautExpr inner = RatPoly(ctx.leading / factorial(g - 1)) * pow(theta_p, g - 1);
  for (const auto& [w, a] : ctx.alpha) inner += a;
  ctx.ledger.use(Axiom::dr_relation);
  ctx.ledger.use(Axiom::dr_leading_poly);
  return TautExpr::push_from(inner);
}

TautExpr abelian_push(const TautExpr& x, PushContext& ctx) {
  const int g = x.genus();
  if (g != ctx.genus) throw DimensionMismatch("push context is for another genus");
  switch (x.locus()) {
    case Locus::open: return push_abelian(x, g, Locus::base, ctx);
    case Locus::boundary: return push_abelian(x, g - 1, Locus::boundary_base, ctx);
    case Locus::total: break;
    default: throw InvalidArgument(std::string("nothing to push from the ") + locus_name(x.locus()) + " locus");
  }

  TautExpr out(Locus::base, g);
  TautExpr boundary(Locus::boundary, g);
  const Rational gf = factorial(g);
  for (const auto& [t, c] : x.terms()) {
    if (t.stratum == Stratum::deep) throw OutsideModel("deep stratum on the total space");
    if (t.stratum == Stratum::pushed) {
      boundary.add({Stratum::own, t.mono}, c);
      continue;
    }
    const int k = t.mono[kTheta];
    Mono u = t.mono;
    u[kTheta] = 0;
    if (k < g) continue;
    if (k == g) {
      out += TautExpr::monomial(Locus::base, g, u, c * RatPoly(gf));
      ctx.ledger.use(Axiom::unit_section);
      continue;
    }
    // theta^{g+1+r} u = (g+1)! theta^r u . (theta^{g+1}/(g+1)!)
    const int r = k - g - 1;
    // theta'^r has weights 0..2r; alpha_w matters when w + e = 2g - 2 for such e.
    for (int e = 2; e <= 2 * r; e += 2) {
      const int w = 2 * g - 2 - e;
      if (w < 0) break;
      if (!ctx.alpha.count(w)) {
        throw OutsideModel("alpha_(" + std::to_string(w) + ") is needed for theta^" + std::to_string(k) +
                           " but not known");
      }
      ctx.ledger.use(ctx.alpha_axioms.at(w));
    }
    Mono rest = u;
    rest[kTheta] = r;
    const TautExpr rel = top_theta_relation(ctx);
    const TautExpr sub = (c * RatPoly(factorial(g + 1))) * (TautExpr::monomial(Locus::total, g, rest) * rel);
    if (rest[static_cast<int>(TautGen::delta)] > 0) ctx.ledger.use(Axiom::excess_self_intersection);
    for (const auto& [s, a] : sub.terms()) boundary.add({Stratum::own, s.mono}, a);
  }
  out += TautExpr::push_from(push_abelian(boundary, g - 1, Locus::boundary_base, ctx));
  return with_delta(out);
}

}  // namespace beauville
