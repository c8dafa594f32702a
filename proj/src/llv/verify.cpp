#include "beauville/llv/verify.hpp"

#include <algorithm>
#include <map>

#include "beauville/exact/linalg.hpp"
#include "beauville/exact/roots.hpp"

namespace beauville {

namespace {

using G = GaussianRational;

Op scale(const G& c, const Op& x) { return mat_scale(c, x); }
Op sub(const Op& a, const Op& b) { return mat_sub(a, b); }
Op add(const Op& a, const Op& b) { return mat_add(a, b); }
Op br(const Op& a, const Op& b) { return mat_bracket(a, b); }

std::string idx(int i, int j) { return std::to_string(i) + std::to_string(j); }

}  // namespace

Report& expect_zero(ReportSink& sink, const std::string& check, const std::vector<Residual>& residuals,
                    const MukaiSpace& space) {
  for (const auto& r : residuals) {
    if (!is_zero(r.diff)) return sink.expect(check, false, r.where + ": " + op_str(r.diff, space));
  }
  return sink.expect(check, true);
}

nlohmann::ordered_json model_params(const FourClassModel& m) {
  nlohmann::ordered_json p;
  p["hdim"] = m.hdim();
  p["t"] = m.t().str();
  return p;
}

std::vector<Report> verify_verbitsky(const FourClassModel& m, nlohmann::ordered_json params) {
  ReportSink sink(std::move(params));
  const auto& sp = *m.space();
  const Op h = op_h(sp);
  std::map<std::pair<int, int>, Op> K;
  std::vector<Op> e(5), f(5);
  for (int i = 1; i <= 4; ++i) {
    e[i] = op_e(m.eta(i));
    f[i] = op_f(m.eta(i));
  }
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (i != j) K[{i, j}] = br(e[i], f[j]);
    }
  }
  std::vector<Residual> anti, kk, kh, ke, kf, kother, triples, skew;
  for (int i = 1; i <= 4; ++i) {
    triples.push_back({"[h,e" + std::to_string(i) + "]-2e", sub(br(h, e[i]), scale(G(2), e[i]))});
    triples.push_back({"[h,f" + std::to_string(i) + "]+2f", add(br(h, f[i]), scale(G(2), f[i]))});
    triples.push_back({"[e,f]" + std::to_string(i) + "-h", sub(br(e[i], f[i]), h)});
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      const Op& kij = K[{i, j}];
      if (!is_skew(sp, kij)) skew.push_back({"K" + idx(i, j), kij});
      anti.push_back({"K" + idx(i, j) + "+K" + idx(j, i), add(kij, K[{j, i}])});
      kh.push_back({"[K" + idx(i, j) + ",h]", br(kij, h)});
      ke.push_back({"[K" + idx(i, j) + ",e" + std::to_string(j) + "]", sub(br(kij, e[j]), scale(G(2), e[i]))});
      kf.push_back({"[K" + idx(i, j) + ",f" + std::to_string(j) + "]", sub(br(kij, f[j]), scale(G(2), f[i]))});
      for (int k = 1; k <= 4; ++k) {
        if (k == i || k == j) continue;
        kk.push_back({"[K" + idx(i, j) + ",K" + idx(j, k) + "]", sub(br(kij, K[{j, k}]), scale(G(2), K[{i, k}]))});
        kother.push_back({"[K" + idx(i, j) + ",e" + std::to_string(k) + "]", br(kij, e[k])});
        kother.push_back({"[K" + idx(i, j) + ",f" + std::to_string(k) + "]", br(kij, f[k])});
      }
    }
  }
  for (int i = 1; i <= 4; ++i) {
    if (!is_skew(sp, e[i])) skew.push_back({"e" + std::to_string(i), e[i]});
    if (!is_skew(sp, f[i])) skew.push_back({"f" + std::to_string(i), f[i]});
  }
  expect_zero(sink, "verbitsky.K_antisymmetric", anti, sp);
  expect_zero(sink, "verbitsky.K_K_bracket", kk, sp);
  expect_zero(sink, "verbitsky.K_commutes_with_h", kh, sp);
  expect_zero(sink, "verbitsky.K_raises_e", ke, sp);
  expect_zero(sink, "verbitsky.K_raises_f", kf, sp);
  expect_zero(sink, "verbitsky.K_kills_other_index", kother, sp);
  expect_zero(sink, "verbitsky.lefschetz_triples", triples, sp);
  expect_zero(sink, "verbitsky.operators_in_so", skew, sp);
  return sink.take();
}

std::vector<Report> verify_sigma(const FourClassModel& m, nlohmann::ordered_json params) {
  ReportSink sink(std::move(params));
  const auto& sp = *m.space();
  std::vector<Residual> sig, bar, mixed, diff, skew;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      const std::string ij = idx(i, j);
      const Op es = e_sigma(m, i, j), fs = f_sigma(m, i, j);
      const Op eb = e_sigbar(m, i, j), fb = f_sigbar(m, i, j);
      const Op hs = br(es, fs), hb = br(eb, fb);
      sig.push_back({"[h,e]sigma" + ij, sub(br(hs, es), scale(G(2), es))});
      sig.push_back({"[h,f]sigma" + ij, add(br(hs, fs), scale(G(2), fs))});
      bar.push_back({"[h,e]sigbar" + ij, sub(br(hb, eb), scale(G(2), eb))});
      bar.push_back({"[h,f]sigbar" + ij, add(br(hb, fb), scale(G(2), fb))});
      mixed.push_back({"[e_sigma,f_sigbar]" + ij, br(es, fb)});
      mixed.push_back({"[e_sigbar,f_sigma]" + ij, br(eb, fs)});
      diff.push_back({"h_sigbar-h_sigma" + ij, sub(sub(hb, hs), scale(G::i(), op_K(m, i, j)))});
      for (const Op* x : {&es, &fs, &eb, &fb, &hs, &hb}) {
        if (!is_skew(sp, *x)) skew.push_back({"sigma" + ij, *x});
      }
    }
  }
  expect_zero(sink, "sigma.sigma_triple", sig, sp);
  expect_zero(sink, "sigma.sigbar_triple", bar, sp);
  expect_zero(sink, "sigma.mixed_brackets_vanish", mixed, sp);
  expect_zero(sink, "sigma.h_difference_is_iK", diff, sp);
  expect_zero(sink, "sigma.operators_in_so", skew, sp);
  return sink.take();
}

LhLambda lhl_elements(const FourClassModel& m) {
  LhLambda out;
  out.L = br(e_sigma(m, 1, 2), f_sigma(m, 3, 4));
  out.Lambda = br(e_sigma(m, 3, 4), f_sigma(m, 1, 2));
  out.H = br(out.L, out.Lambda);
  return out;
}

std::vector<Report> verify_lhl(const FourClassModel& m, nlohmann::ordered_json params) {
  ReportSink sink(std::move(params));
  const auto& sp = *m.space();
  const auto [L, Lambda, H] = lhl_elements(m);
  auto K = [&](int i, int j) { return op_K(m, i, j); };
  const Op a = add(K(1, 3), K(2, 4));  // K13 + K24
  const Op b = sub(K(1, 4), K(2, 3));  // K14 - K23
  const Op c = sub(K(1, 2), K(3, 4));  // K12 - K34
  const G quarter(Rational(1, 4));
  expect_zero(sink, "lhl.L_in_K", {{"L", sub(L, scale(quarter, sub(a, scale(G::i(), b))))}}, sp);
  expect_zero(sink, "lhl.Lambda_in_K",
              {{"Lambda", sub(Lambda, scale(quarter, sub(scale(G(-1), a), scale(G::i(), b))))}}, sp);
  expect_zero(sink, "lhl.H_in_K", {{"H", sub(H, scale(G(Rational(0), Rational(-1, 2)), c))}}, sp);
  expect_zero(sink, "lhl.H_via_bracket",
              {{"-(i/8)[K13+K24,K14-K23]", sub(H, scale(G(Rational(0), Rational(-1, 8)), br(a, b)))}}, sp);
  expect_zero(sink, "lhl.K_identities",
              {{"[K12-K34,K13+K24]", sub(br(c, a), scale(G(4), b))},
               {"[K12-K34,K14-K23]", add(br(c, b), scale(G(4), a))}},
              sp);
  expect_zero(sink, "lhl.sl2",
              {{"[H,L]-2L", sub(br(H, L), scale(G(2), L))},
               {"[H,Lambda]+2Lambda", add(br(H, Lambda), scale(G(2), Lambda))},
               {"[L,Lambda]-H", sub(br(L, Lambda), H)}},
              sp);
  std::vector<Residual> skew;
  for (const Op* x : {&L, &Lambda, &H}) {
    if (!is_skew(sp, *x)) skew.push_back({"element", *x});
  }
  expect_zero(sink, "lhl.operators_in_so", skew, sp);
  return sink.take();
}

std::vector<Report> verify_eta_sigma(const FourClassModel& m, const LatticeClass& eta, nlohmann::ordered_json params) {
  ReportSink sink(std::move(params));
  const auto& sp = *m.space();
  if (!pairing(eta, m.eta(2)).is_zero() || !pairing(eta, m.eta(3)).is_zero()) {
    sink.unsupported("eta_sigma.identity", "eta is not orthogonal to eta2, eta3");
    return sink.take();
  }
  const Op es = e_sigma(m, 2, 3), fs = f_sigma(m, 2, 3);
  const Op ee = op_e(eta);
  const Op inner = br(fs, ee);
  expect_zero(sink, "eta_sigma.identity", {{"[e_sigma,[f_sigma,e_eta]]-e_eta", sub(br(es, inner), ee)}}, sp);
  return sink.take();
}

bool WeightDecomposition::symmetric() const {
  std::map<long, int> w(weights.begin(), weights.end());
  for (const auto& [l, d] : w) {
    auto it = w.find(-l);
    if (it == w.end() || it->second != d) return false;
  }
  return true;
}

std::string WeightDecomposition::str() const {
  std::string out;
  for (const auto& [l, d] : weights) {
    if (!out.empty()) out += ", ";
    out += std::to_string(l) + "^" + std::to_string(d);
  }
  if (!integral) out += " (non-integral part)";
  if (!diagonalizable) out += " (not diagonalizable)";
  return out;
}

WeightDecomposition weight_decompose(const Op& h) {
  if (h.rows() != h.cols()) throw DimensionMismatch("weight decomposition needs a square operator");
  const DenseMat<G> d = dense_from(h);
  const auto cp = char_poly(d);
  const auto roots = integer_roots(cp);
  WeightDecomposition out;
  const long n = static_cast<long>(h.rows());
  long algebraic = 0;
  long geometric = 0;
  for (long r : roots) {
    // multiplicity by repeated synthetic division
    std::vector<G> p = cp;
    int mult = 0;
    while (p.size() > 1) {
      std::vector<G> q(p.size() - 1, G(0));
      G carry(0);
      for (std::size_t k = p.size(); k-- > 1;) {
        carry = carry * G(Rational(r)) + p[k];
        q[k - 1] = carry;
      }
      const G rem = carry * G(Rational(r)) + p[0];
      if (!rem.is_zero()) break;
      p = q;
      ++mult;
    }
    algebraic += mult;
    DenseMat<G> shifted = d;
    for (long i = 0; i < n; ++i) shifted(i, i) -= G(Rational(r));
    const int dim = static_cast<int>(n - rank(shifted));
    geometric += dim;
    out.weights.emplace_back(r, dim);
    if (dim != mult) out.diagonalizable = false;
  }
  if (algebraic != n) out.integral = false;
  if (geometric != n) out.diagonalizable = false;
  return out;
}

}  // namespace beauville
