#include "beauville/llv/triple.hpp"

#include "beauville/error.hpp"
#include "beauville/exact/linalg.hpp"
#include "beauville/llv/verify.hpp"

namespace beauville {

namespace {

using G = GaussianRational;

CstPoly cp(long v) { return CstPoly(G(Rational(v))); }

void check_sign(int c, const char* name) {
  if (c != 1 && c != -1) throw InvalidArgument(std::string(name) + " must be +1 or -1");
}

}  // namespace

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::Ea: return "E'alpha";
    case Gen::Fa: return "F'alpha";
    case Gen::Eb: return "E'beta";
    case Gen::Fb: return "F'beta";
    case Gen::Et: return "E'Thetabar";
    case Gen::Ft: return "F'Thetabar";
    case Gen::Eh: return "E'Hyp";
    case Gen::Fh: return "F'Hyp";
  }
  return "?";
}

const std::vector<Gen>& all_gens() {
  static const std::vector<Gen> gens{Gen::Ea, Gen::Fa, Gen::Eb, Gen::Fb, Gen::Et, Gen::Ft, Gen::Eh, Gen::Fh};
  return gens;
}

bool is_raising(Gen g) { return g == Gen::Ea || g == Gen::Eb || g == Gen::Et || g == Gen::Eh; }

OperatorDictionary build_primed_dictionary(const FourClassModel& m, int c0) {
  check_sign(c0, "c0");
  const G minus_c0(Rational(-c0));  // -c0^{-1} = -c0
  OperatorDictionary d;
  d[Gen::Ea] = lift(e_sigma(m, 1, 2));
  d[Gen::Fa] = lift(f_sigma(m, 1, 2));
  d[Gen::Eb] = lift(mat_scale(G(-1), e_sigbar(m, 1, 2)));
  d[Gen::Fb] = lift(mat_scale(G(-1), f_sigbar(m, 1, 2)));
  d[Gen::Et] = lift(e_sigma(m, 3, 4));
  d[Gen::Ft] = lift(f_sigma(m, 3, 4));
  d[Gen::Eh] = lift(mat_scale(minus_c0, e_sigbar(m, 3, 4)));
  d[Gen::Fh] = lift(mat_scale(minus_c0, f_sigbar(m, 3, 4)));
  return d;
}

struct OpExpr::Node {
  Kind kind = Kind::zero;
  Gen gen = Gen::Ea;
  CstPoly coef;
  std::vector<OpExpr> kids;
};

OpExpr::OpExpr() : node_(std::make_shared<const Node>()) {}

OpExpr OpExpr::gen(Gen g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::gen;
  n->gen = g;
  return OpExpr(n);
}

OpExpr OpExpr::bracket(const OpExpr& a, const OpExpr& b) {
  if (a.kind() == Kind::zero || b.kind() == Kind::zero) return {};
  auto n = std::make_shared<Node>();
  n->kind = Kind::bracket;
  n->kids = {a, b};
  return OpExpr(n);
}

OpExpr operator+(const OpExpr& a, const OpExpr& b) {
  if (a.kind() == OpExpr::Kind::zero) return b;
  if (b.kind() == OpExpr::Kind::zero) return a;
  auto n = std::make_shared<OpExpr::Node>();
  n->kind = OpExpr::Kind::sum;
  n->kids = {a, b};
  return OpExpr(n);
}

OpExpr operator*(const CstPoly& c, const OpExpr& a) {
  if (c.is_zero() || a.kind() == OpExpr::Kind::zero) return {};
  if (c == CstPoly(1)) return a;
  auto n = std::make_shared<OpExpr::Node>();
  n->kind = OpExpr::Kind::scale;
  n->coef = c;
  n->kids = {a};
  return OpExpr(n);
}

OpExpr OpExpr::operator-() const { return CstPoly(-1) * *this; }
OpExpr operator-(const OpExpr& a, const OpExpr& b) { return a + (-b); }

OpExpr::Kind OpExpr::kind() const { return node_->kind; }
Gen OpExpr::generator() const { return node_->gen; }
const CstPoly& OpExpr::coefficient() const { return node_->coef; }
const std::vector<OpExpr>& OpExpr::children() const { return node_->kids; }

std::string OpExpr::str() const {
  switch (kind()) {
    case Kind::zero: return "0";
    case Kind::gen: return gen_name(generator());
    case Kind::scale: {
      const std::string c = coefficient().str();
      return (detail::compound(c) ? "(" + c + ")" : c) + "*" + children()[0].str();
    }
    case Kind::sum: return "(" + children()[0].str() + " + " + children()[1].str() + ")";
    case Kind::bracket: return "[" + children()[0].str() + ", " + children()[1].str() + "]";
  }
  return "?";
}

CstOp evaluate(const OpExpr& x, const OperatorDictionary& dict) {
  const auto n = dict.begin()->second.rows();
  switch (x.kind()) {
    case OpExpr::Kind::zero: return CstOp(n, n);
    case OpExpr::Kind::gen: return dict.at(x.generator());
    case OpExpr::Kind::scale: return mat_scale(x.coefficient(), evaluate(x.children()[0], dict));
    case OpExpr::Kind::sum: return mat_add(evaluate(x.children()[0], dict), evaluate(x.children()[1], dict));
    case OpExpr::Kind::bracket:
      return mat_bracket(evaluate(x.children()[0], dict), evaluate(x.children()[1], dict));
  }
  throw InvalidArgument("bad expression");
}

OpExpr to_expr(const Combo& c) {
  OpExpr out;
  for (const auto& [g, k] : c) out = out + k * OpExpr::gen(g);
  return out;
}

std::string combo_str(const Combo& c) {
  std::string out;
  for (const auto& [g, k] : c) {
    if (k.is_zero()) continue;
    const std::string s = k.str();
    std::string term;
    if (s == "1") {
      term = gen_name(g);
    } else if (s == "-1") {
      term = std::string("-") + gen_name(g);
    } else {
      term = (detail::compound(s) ? "(" + s + ")" : s) + "*" + gen_name(g);
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

OpExpr FourierOpMap::apply(const OpExpr& x) const {
  switch (x.kind()) {
    case OpExpr::Kind::zero: return x;
    case OpExpr::Kind::gen: {
      auto it = images.find(x.generator());
      if (it == images.end()) throw OutsideModel(std::string("no Fourier image for ") + gen_name(x.generator()));
      return to_expr(it->second);
    }
    case OpExpr::Kind::scale: return x.coefficient() * apply(x.children()[0]);
    case OpExpr::Kind::sum: return apply(x.children()[0]) + apply(x.children()[1]);
    case OpExpr::Kind::bracket: return OpExpr::bracket(apply(x.children()[0]), apply(x.children()[1]));
  }
  throw InvalidArgument("bad expression");
}

FourierOpMap fourier_op_map(int c0, int c1, const CstPoly& cst) {
  check_sign(c0, "c0");
  check_sign(c1, "c1");
  FourierOpMap m;
  m.c0 = c0;
  m.c1 = c1;
  const CstPoly k1 = cp(c1);
  const CstPoly k10 = cp(c1 * c0);
  m.images[Gen::Ea] = {{Gen::Et, k1}};
  m.images[Gen::Et] = {{Gen::Ea, -k1}, {Gen::Eh, k1 * cst}};
  m.images[Gen::Eb] = {{Gen::Eh, k10}};
  m.images[Gen::Eh] = {{Gen::Eb, -k10}};
  m.images[Gen::Fa] = {{Gen::Ft, k1}};
  m.images[Gen::Ft] = {{Gen::Fa, -k1}, {Gen::Fh, cst}};
  m.images[Gen::Fb] = {{Gen::Fh, k10}};
  m.images[Gen::Fh] = {{Gen::Fb, -k10}};
  for (auto& [g, combo] : m.images) {
    for (auto it = combo.begin(); it != combo.end();) {
      it = it->second.is_zero() ? combo.erase(it) : std::next(it);
    }
  }
  return m;
}

TripleExprs triple_exprs(const FourierOpMap& map) {
  TripleExprs t;
  const CstPoly c0 = cp(map.c0);
  t.e0 = c0 * OpExpr::bracket(OpExpr::gen(Gen::Fa), OpExpr::gen(Gen::Et));
  t.f0_mapped = -map.apply(t.e0);
  t.f0 = c0 * OpExpr::bracket(OpExpr::gen(Gen::Ft), OpExpr::gen(Gen::Ea));
  t.h0 = OpExpr::bracket(t.e0, t.f0);
  return t;
}

Triple build_triple(const OperatorDictionary& dict, const FourierOpMap& map) {
  const TripleExprs x = triple_exprs(map);
  Triple t;
  t.e0 = evaluate(x.e0, dict);
  t.f0 = evaluate(x.f0_mapped, dict);
  const CstOp closed = evaluate(x.f0, dict);
  if (!mat_equal(t.f0, closed)) {
    throw InvalidArgument("-F(e0) differs from c0[F'Thetabar, E'alpha]");
  }
  t.h0 = mat_bracket(t.e0, t.f0);
  return t;
}

nlohmann::ordered_json triple_params(int g, int c0, int c1, const FourClassModel& m) {
  nlohmann::ordered_json p;
  p["g"] = g;
  p["c0"] = c0;
  p["c1"] = c1;
  p["hdim"] = m.hdim();
  p["t"] = m.t().str();
  return p;
}

namespace {

struct CstResidual {
  std::string where;
  CstOp diff;
};

Report& expect_zero_cst(ReportSink& sink, const std::string& check, const std::vector<CstResidual>& rs,
                        const MukaiSpace& space) {
  for (const auto& r : rs) {
    if (!is_zero(r.diff)) return sink.expect(check, false, r.where + ": " + op_str(r.diff, space));
  }
  return sink.expect(check, true);
}

CstOp scale(long c, const CstOp& x) { return mat_scale(cp(c), x); }

}  // namespace

std::vector<Report> verify_triple(const FourClassModel& m, int g, int c0, int c1) {
  if (g < 2) throw InvalidArgument("genus must be at least 2");
  ReportSink sink(triple_params(g, c0, c1, m));
  const auto& sp = *m.space();
  const auto dict = build_primed_dictionary(m, c0);
  const auto map = fourier_op_map(c0, c1);
  const auto x = triple_exprs(map);
  auto ev = [&](const OpExpr& e) { return evaluate(e, dict); };
  auto gen = [](Gen q) { return OpExpr::gen(q); };
  const CstPoly cst = CstPoly::x(Var::cst);

  // e0 = -[F'a, E'Theta] with E'Theta = -c0 E'Thetabar + cst E'beta
  const OpExpr e_theta = cp(-c0) * gen(Gen::Et) + cst * gen(Gen::Eb);
  const CstOp e0_route = ev(-OpExpr::bracket(gen(Gen::Fa), e_theta));
  const CstOp e0 = ev(x.e0);
  expect_zero_cst(sink, "triple.vanishing_brackets",
                  {{"[F'alpha,E'beta]", ev(OpExpr::bracket(gen(Gen::Fa), gen(Gen::Eb)))},
                   {"[F'Thetabar,E'Hyp]", ev(OpExpr::bracket(gen(Gen::Ft), gen(Gen::Eh)))},
                   {"[F'Hyp,E'Thetabar]", ev(OpExpr::bracket(gen(Gen::Fh), gen(Gen::Et)))}},
                  sp);
  expect_zero_cst(sink, "triple.e0_closed_form", {{"-[F'alpha,E'Theta]-c0[F'alpha,E'Thetabar]", mat_sub(e0_route, e0)}},
                  sp);
  const CstOp f0 = ev(x.f0_mapped);
  const CstOp f0_closed = ev(x.f0);
  expect_zero_cst(sink, "triple.f0_closed_form", {{"-F(e0)-c0[F'Thetabar,E'alpha]", mat_sub(f0, f0_closed)}}, sp);
  const CstOp h0 = mat_bracket(e0, f0);
  expect_zero_cst(sink, "triple.sl2",
                  {{"[h0,e0]-2e0", mat_sub(mat_bracket(h0, e0), scale(2, e0))},
                   {"[h0,f0]+2f0", mat_add(mat_bracket(h0, f0), scale(2, f0))}},
                  sp);
  const CstOp D = lift(mat_scale(G::i(), op_K(m, 1, 2)));
  const CstOp D_from_h =
      lift(mat_sub(mat_bracket(e_sigbar(m, 1, 2), f_sigbar(m, 1, 2)), mat_bracket(e_sigma(m, 1, 2), f_sigma(m, 1, 2))));
  expect_zero_cst(sink, "triple.f0_degree_minus_2",
                  {{"D-(h_sigbar12-h_sigma12)", mat_sub(D, D_from_h)},
                   {"[D,f0]+2f0", mat_add(mat_bracket(D, f0), scale(2, f0))},
                   {"[D,e0]-2e0", mat_sub(mat_bracket(D, e0), scale(2, e0))}},
                  sp);
  const auto p25 = lhl_elements(m);
  expect_zero_cst(sink, "triple.matches_lhl",
                  {{"e0+c0*Lambda", mat_add(e0, lift(mat_scale(G(c0), p25.Lambda)))},
                   {"f0+c0*L", mat_add(f0, lift(mat_scale(G(c0), p25.L)))},
                   {"h0+H", mat_add(h0, lift(p25.H))}},
                  sp);
  std::vector<CstResidual> skew;
  for (const auto& [q, op] : dict) {
    if (!is_skew(sp, op)) skew.push_back({gen_name(q), op});
  }
  for (const CstOp* op : {&e0, &f0, &h0}) {
    if (!is_skew(sp, *op)) skew.push_back({"triple", *op});
  }
  expect_zero_cst(sink, "triple.operators_in_so", skew, sp);

  try {
    const auto w = weight_decompose(constant_op(h0));
    auto& r = sink.expect("triple.h0_weights", w.integral && w.diagonalizable && w.symmetric(), w.str());
    r.value = w.str();
  } catch (const Error& e) {
    sink.unsupported("triple.h0_weights", e.what());
  }
  return sink.take();
}

std::vector<Report> verify_fourier_conjugacy(const FourClassModel& m, int g, int c0, int c1) {
  if (g < 2) throw InvalidArgument("genus must be at least 2");
  ReportSink sink(triple_params(g, c0, c1, m));
  const auto& sp = *m.space();
  const auto dict = build_primed_dictionary(m, c0);
  const auto map = fourier_op_map(c0, c1);
  const auto x = triple_exprs(map);
  auto ev = [&](const OpExpr& e) { return evaluate(e, dict); };
  const CstOp e0 = ev(x.e0);
  const CstOp f0 = ev(x.f0);
  const CstOp h0 = ev(x.h0);
  expect_zero_cst(sink, "conjugacy.e0", {{"F(e0)+f0", mat_add(ev(map.apply(x.e0)), f0)}}, sp);
  expect_zero_cst(sink, "conjugacy.f0", {{"F(f0)+e0", mat_add(ev(map.apply(x.f0)), e0)}}, sp);
  expect_zero_cst(sink, "conjugacy.h0", {{"F(h0)+h0", mat_add(ev(map.apply(x.h0)), h0)}}, sp);
  return sink.take();
}

std::vector<Report> verify_op_map_compatibility(int g, int c0, int c1) {
  if (g < 2) throw InvalidArgument("genus must be at least 2");
  return verify_op_map_compatibility(MukaiSpace::standard(g, Rational(1)), c0, c1);
}

std::vector<Report> verify_op_map_compatibility(const SpacePtr& space, int c0, int c1) {
  const int g = space->genus();
  nlohmann::ordered_json params;
  params["g"] = g;
  params["c0"] = c0;
  params["c1"] = c1;
  ReportSink sink(params);
  const auto F = fourier_matrix(*space, c0, c1);
  const LatticeClass alpha = LatticeClass::basis(space, "alpha");
  const LatticeClass beta = LatticeClass::basis(space, "beta");
  const LatticeClass hyp = LatticeClass::basis(space, "Hyp");
  const LatticeClass thetabar = apply(F, alpha);
  const std::vector<std::pair<Gen, LatticeClass>> slots{
      {Gen::Ea, alpha}, {Gen::Et, thetabar}, {Gen::Eb, beta}, {Gen::Eh, hyp}};
  DenseMat<G> basis(space->dim(), 4);
  for (int k = 0; k < 4; ++k) basis.col(k) = slots[k].second.coords();

  sink.expect("compat.isometry", is_isometry(*space, F));
  const auto map = fourier_op_map(c0, c1, CstPoly(G(Rational(g + 1))));
  std::string bad;
  for (const auto& [gen, cls] : slots) {
    const LatticeClass image = apply(F, cls);
    Vec<G> coords;
    try {
      coords = solve_unique<G>(basis, image.coords());
    } catch (const Error&) {
      bad = std::string("image of ") + gen_name(gen) + " leaves the span";
      break;
    }
    Combo expected;
    for (int k = 0; k < 4; ++k) {
      if (!coords(k).is_zero()) expected[slots[k].first] = CstPoly(G(c1) * coords(k));
    }
    const Combo& got = map.images.at(gen);
    if (expected != got) {
      bad = std::string(gen_name(gen)) + ": operator map gives " + combo_str(got) + ", class level gives " +
            combo_str(expected);
      break;
    }
  }
  sink.expect("compat.raising_images", bad.empty(), bad);
  // the beta slot spelled out: F(beta) = c0 Hyp, so E'beta -> c1 c0 E'Hyp
  const Combo beta_img = map.images.at(Gen::Eb);
  sink.expect("compat.beta_slot", apply(F, beta) == GaussianRational(c0) * hyp &&
                                      beta_img == Combo{{Gen::Eh, CstPoly(G(c1 * c0))}},
              combo_str(beta_img));
  return sink.take();
}

}  // namespace beauville
