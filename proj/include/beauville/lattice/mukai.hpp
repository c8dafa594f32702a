#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "beauville/exact/gaussian_rational.hpp"
#include "beauville/exact/matrix.hpp"
#include "json.hpp"

namespace beauville {

/// Based quadratic space standing in for the extended Mukai lattice
/// Q alpha + H^2 + Q beta. Labels "alpha" and "beta" are required; "Theta"
/// and "Hyp" (the isotropic hyperbolic partner of Theta) are optional.
class MukaiSpace {
 public:
  MukaiSpace(std::vector<std::string> labels, DenseMat<Rational> gram, int genus);

  /// alpha, Theta, Hyp, eta1..eta4, x1..x_extra, beta with diag(t) on the
  /// eta and x classes.
  static std::shared_ptr<const MukaiSpace> standard(int genus, const Rational& t, int extra = 0);

  /// alpha, eta1..eta4, x1..x_extra, beta: no hyperbolic pair.
  static std::shared_ptr<const MukaiSpace> four_class(const Rational& t, int extra = 0);

  int dim() const { return static_cast<int>(labels_.size()); }
  int genus() const { return genus_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const DenseMat<Rational>& gram() const { return gram_; }

  std::optional<int> find(const std::string& label) const;
  int index(const std::string& label) const;  // throws InvalidArgument
  bool has(const std::string& label) const { return find(label).has_value(); }
  int alpha() const { return alpha_; }
  int beta() const { return beta_; }

  /// Indices strictly between the alpha and beta slots (the H^2 part).
  std::vector<int> middle() const;

  nlohmann::ordered_json to_json() const;
  static std::shared_ptr<const MukaiSpace> from_json(const nlohmann::json& doc);

  bool same_as(const MukaiSpace& other) const;

 private:
  std::vector<std::string> labels_;
  DenseMat<Rational> gram_;
  int genus_;
  int alpha_;
  int beta_;
};

using SpacePtr = std::shared_ptr<const MukaiSpace>;

/// A vector in a MukaiSpace with Gaussian rational coordinates.
class LatticeClass {
 public:
  LatticeClass(SpacePtr space, Vec<GaussianRational> coords);

  static LatticeClass zero(SpacePtr space);
  static LatticeClass basis(SpacePtr space, const std::string& label);

  const SpacePtr& space() const { return space_; }
  const Vec<GaussianRational>& coords() const { return coords_; }
  const GaussianRational& operator[](int k) const { return coords_(k); }

  LatticeClass operator-() const;
  LatticeClass& operator+=(const LatticeClass& o);
  friend LatticeClass operator+(LatticeClass a, const LatticeClass& b) { return a += b; }
  friend LatticeClass operator-(LatticeClass a, const LatticeClass& b) { return a += -b; }
  friend LatticeClass operator*(const GaussianRational& c, const LatticeClass& x);
  friend bool operator==(const LatticeClass& a, const LatticeClass& b);

  bool is_zero() const;
  std::string str() const;

 private:
  SpacePtr space_;
  Vec<GaussianRational> coords_;
};

void require_same_space(const LatticeClass& x, const LatticeClass& y);

/// Bilinear form (x, y); symmetric, no conjugation.
GaussianRational pairing(const LatticeClass& x, const LatticeClass& y);
inline GaussianRational square(const LatticeClass& x) { return pairing(x, x); }

/// lambda with q(A + lambda H) = 0 for isotropic H, i.e. -q(A) / 2(A, H).
Rational solve_lambda(const LatticeClass& a, const LatticeClass& h);

/// Cohomological Fourier transform on the span of alpha, beta, Theta, Hyp
/// and c1 times the identity on their orthogonal complement. Column j is the
/// image of basis vector j.
SparseMat<Rational> fourier_matrix(const MukaiSpace& space, int c0, int c1);

LatticeClass apply(const SparseMat<Rational>& m, const LatticeClass& x);

/// M^T G M == G.
bool is_isometry(const MukaiSpace& space, const SparseMat<Rational>& m);

}  // namespace beauville
