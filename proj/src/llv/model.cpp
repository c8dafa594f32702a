#include "beauville/llv/model.hpp"

#include <random>

#include "beauville/error.hpp"
#include "beauville/exact/linalg.hpp"

namespace beauville {

namespace {

using G = GaussianRational;

void check_hdim(int hdim) {
  if (hdim < 6 || hdim > 10) throw InvalidArgument("model dimension must be in 6..10");
}

bool is_middle(const LatticeClass& x) {
  const auto& s = *x.space();
  return x[s.alpha()].is_zero() && x[s.beta()].is_zero();
}

std::string entry_list(const std::vector<std::tuple<int, int, std::string>>& entries,
                       const MukaiSpace& space) {
  std::string out;
  for (const auto& [r, c, v] : entries) {
    if (!out.empty()) out += ", ";
    out += space.labels()[c] + "->" + space.labels()[r] + ": " + v;
  }
  return out.empty() ? "0" : out;
}

template <class S>
std::string listing(const SparseMat<S>& x, const MukaiSpace& space) {
  std::vector<std::tuple<int, int, std::string>> entries;
  for (Eigen::Index k = 0; k < x.outerSize(); ++k) {
    for (typename SparseMat<S>::InnerIterator it(x, k); it; ++it) {
      if (!is_zero(it.value())) {
        entries.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value().str());
      }
    }
  }
  return entry_list(entries, space);
}

}  // namespace

FourClassModel::FourClassModel(SpacePtr space, Rational t, std::vector<LatticeClass> eta,
                               std::vector<LatticeClass> complement)
    : space_(std::move(space)), t_(std::move(t)), eta_(std::move(eta)), complement_(std::move(complement)) {}

FourClassModel FourClassModel::standard(int hdim, const Rational& t) {
  check_hdim(hdim);
  auto space = MukaiSpace::four_class(t, hdim - 6);
  std::vector<LatticeClass> eta;
  for (int i = 1; i <= 4; ++i) eta.push_back(LatticeClass::basis(space, "eta" + std::to_string(i)));
  std::vector<LatticeClass> rest;
  for (int k = 1; k <= hdim - 6; ++k) rest.push_back(LatticeClass::basis(space, "x" + std::to_string(k)));
  return {space, t, eta, rest};
}

FourClassModel FourClassModel::rotated(int hdim, const Rational& t, std::uint64_t seed) {
  check_hdim(hdim);
  auto space = MukaiSpace::four_class(t, hdim - 6);
  const auto mid = space->middle();
  const int m = static_cast<int>(mid.size());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  DenseMat<Rational> s = DenseMat<Rational>::Constant(m, m, Rational(0));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      s(i, j) = Rational(num(rng), den(rng));
      s(j, i) = -s(i, j);
    }
  }
  DenseMat<Rational> id = DenseMat<Rational>::Constant(m, m, Rational(0));
  for (int i = 0; i < m; ++i) id(i, i) = Rational(1);
  // (I - S) is invertible for real skew S.
  const DenseMat<Rational> q = inverse<Rational>(id - s) * DenseMat<Rational>(id + s);
  std::vector<LatticeClass> cols;
  for (int c = 0; c < m; ++c) {
    Vec<G> v = Vec<G>::Constant(space->dim(), G(0));
    for (int r = 0; r < m; ++r) v(mid[r]) = G(q(r, c));
    cols.emplace_back(space, v);
  }
  std::vector<LatticeClass> eta(cols.begin(), cols.begin() + 4);
  std::vector<LatticeClass> rest(cols.begin() + 4, cols.end());
  return {space, t, eta, rest};
}

const LatticeClass& FourClassModel::eta(int i) const {
  if (i < 1 || i > 4) throw InvalidArgument("eta index must be 1..4");
  return eta_[i - 1];
}

LatticeClass FourClassModel::sigma(int i, int j) const {
  if (i == j) throw InvalidArgument("sigma needs distinct indices");
  return G(Rational(1, 2)) * (eta(i) + G::i() * eta(j));
}

LatticeClass FourClassModel::sigbar(int i, int j) const {
  if (i == j) throw InvalidArgument("sigma needs distinct indices");
  return G(Rational(1, 2)) * (eta(i) - G::i() * eta(j));
}

Op op_h(const MukaiSpace& space) {
  return sparse_from<G>(space.dim(), space.dim(),
                        {{space.alpha(), space.alpha(), G(-2)}, {space.beta(), space.beta(), G(2)}});
}

Op op_e(const LatticeClass& eta) {
  if (!is_middle(eta)) throw InvalidArgument("e needs a class in the middle part");
  const auto& s = *eta.space();
  std::vector<Triplet<G>> t;
  for (int k : s.middle()) {
    if (!eta[k].is_zero()) t.emplace_back(k, s.alpha(), eta[k]);
    const G p = pairing(eta, LatticeClass::basis(eta.space(), s.labels()[k]));
    if (!p.is_zero()) t.emplace_back(s.beta(), k, p);
  }
  return sparse_from<G>(s.dim(), s.dim(), t);
}

Op op_f(const LatticeClass& eta) {
  if (!is_middle(eta)) throw InvalidArgument("f needs a class in the middle part");
  const G q = square(eta);
  if (q.is_zero()) throw InvalidArgument("f of an isotropic class is not defined");
  const auto& s = *eta.space();
  const G two_over_q = G(2) / q;
  std::vector<Triplet<G>> t;
  for (int k : s.middle()) {
    if (!eta[k].is_zero()) t.emplace_back(k, s.beta(), two_over_q * eta[k]);
    const G p = pairing(eta, LatticeClass::basis(eta.space(), s.labels()[k]));
    if (!p.is_zero()) t.emplace_back(s.alpha(), k, two_over_q * p);
  }
  return sparse_from<G>(s.dim(), s.dim(), t);
}

Op op_K(const FourClassModel& m, int i, int j) {
  if (i == j) throw InvalidArgument("K needs distinct indices");
  return mat_bracket(op_e(m.eta(i)), op_f(m.eta(j)));
}

Op e_sigma(const FourClassModel& m, int i, int j) { return op_e(m.sigma(i, j)); }
Op e_sigbar(const FourClassModel& m, int i, int j) { return op_e(m.sigbar(i, j)); }

Op f_sigma(const FourClassModel& m, int i, int j) {
  if (i == j) throw InvalidArgument("sigma needs distinct indices");
  return mat_scale(G(Rational(1, 2)), mat_sub(op_f(m.eta(i)), mat_scale(G::i(), op_f(m.eta(j)))));
}

Op f_sigbar(const FourClassModel& m, int i, int j) {
  if (i == j) throw InvalidArgument("sigma needs distinct indices");
  return mat_scale(G(Rational(1, 2)), mat_add(op_f(m.eta(i)), mat_scale(G::i(), op_f(m.eta(j)))));
}

CstOp lift(const Op& x) {
  return mat_map<CstPoly>(x, [](const G& v) { return CstPoly(v); });
}

Op specialize(const CstOp& x, const G& cst) {
  return mat_map<G>(x, [&](const CstPoly& p) { return p.eval(cst); });
}

Op constant_op(const CstOp& x) {
  return mat_map<G>(x, [](const CstPoly& p) {
    if (!p.is_constant()) throw InvalidArgument("operator still depends on cst");
    return p.coeff(0);
  });
}

std::string op_str(const Op& x, const MukaiSpace& space) { return listing(x, space); }
std::string op_str(const CstOp& x, const MukaiSpace& space) { return listing(x, space); }

}  // namespace beauville
