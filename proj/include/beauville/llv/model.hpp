#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "beauville/exact/matrix.hpp"
#include "beauville/lattice/mukai.hpp"

namespace beauville {

using Op = SparseMat<GaussianRational>;
using CstOp = SparseMat<CstPoly>;

/// alpha, eta1..eta4 (pairwise orthogonal, common square t), optional extra
/// orthogonal directions, beta.
class FourClassModel {
 public:
  /// hdim is the dimension of the whole space, 6..10.
  static FourClassModel standard(int hdim, const Rational& t);
  /// eta_i replaced by the columns of a random rational rotation of the
  /// middle block (Cayley transform of a seeded skew matrix).
  static FourClassModel rotated(int hdim, const Rational& t, std::uint64_t seed);

  const SpacePtr& space() const { return space_; }
  const Rational& t() const { return t_; }
  int hdim() const { return space_->dim(); }
  const LatticeClass& eta(int i) const;
  /// Middle classes orthogonal to all four eta.
  const std::vector<LatticeClass>& complement() const { return complement_; }

  LatticeClass sigma(int i, int j) const;   // (eta_i + i eta_j) / 2
  LatticeClass sigbar(int i, int j) const;  // (eta_i - i eta_j) / 2

 private:
  FourClassModel(SpacePtr space, Rational t, std::vector<LatticeClass> eta,
                 std::vector<LatticeClass> complement);
  SpacePtr space_;
  Rational t_;
  std::vector<LatticeClass> eta_;
  std::vector<LatticeClass> complement_;
};

/// Grading operator: alpha -> -2 alpha, beta -> 2 beta, middle -> 0.
Op op_h(const MukaiSpace& space);
/// alpha -> eta, mu -> (eta, mu) beta, beta -> 0.
Op op_e(const LatticeClass& eta);
/// beta -> (2/q) eta, mu -> (2 (eta, mu)/q) alpha, alpha -> 0.
Op op_f(const LatticeClass& eta);
/// [e_{eta_i}, f_{eta_j}], 1-based, i != j.
Op op_K(const FourClassModel& m, int i, int j);

Op e_sigma(const FourClassModel& m, int i, int j);
Op e_sigbar(const FourClassModel& m, int i, int j);
Op f_sigma(const FourClassModel& m, int i, int j);   // (f_i - i f_j) / 2
Op f_sigbar(const FourClassModel& m, int i, int j);  // (f_i + i f_j) / 2

/// Membership in so: G X + X^T G = 0.
template <class S>
bool is_skew(const MukaiSpace& space, const SparseMat<S>& x) {
  if (x.rows() != space.dim() || x.cols() != space.dim()) throw DimensionMismatch("operator size");
  const DenseMat<S> d = dense_from(x);
  for (int u = 0; u < space.dim(); ++u) {
    for (int v = 0; v < space.dim(); ++v) {
      S acc(0);
      for (int k = 0; k < space.dim(); ++k) {
        const Rational& guk = space.gram()(u, k);
        const Rational& gkv = space.gram()(k, v);
        if (!guk.is_zero() && !is_zero(d(k, v))) acc += S(GaussianRational(guk)) * d(k, v);
        if (!gkv.is_zero() && !is_zero(d(k, u))) acc += S(GaussianRational(gkv)) * d(k, u);
      }
      if (!is_zero(acc)) return false;
    }
  }
  return true;
}

CstOp lift(const Op& x);
/// cst set to a value.
Op specialize(const CstOp& x, const GaussianRational& cst);
/// Throws InvalidArgument if some entry still depends on cst.
Op constant_op(const CstOp& x);

/// "alpha->eta1: 1/2*i, ..." listing of the nonzero entries (column -> row).
std::string op_str(const Op& x, const MukaiSpace& space);
std::string op_str(const CstOp& x, const MukaiSpace& space);

}  // namespace beauville
