#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "beauville/llv/model.hpp"
#include "beauville/report.hpp"

namespace beauville {

/// Primed generators, named after the class they come from: alpha, beta,
/// Thetabar (image of alpha under Fourier) and Hyp.
enum class Gen { Ea, Fa, Eb, Fb, Et, Ft, Eh, Fh };

const char* gen_name(Gen g);
const std::vector<Gen>& all_gens();
bool is_raising(Gen g);

/// Primed operators as matrices in the conjugated sigma-model.
using OperatorDictionary = std::map<Gen, CstOp>;

/// E'_a = e_s12, F'_a = f_s12, E'_b = -e_sb12, F'_b = -f_sb12,
/// E'_t = e_s34, F'_t = f_s34, E'_h = -c0 e_sb34, F'_h = -c0 f_sb34.
OperatorDictionary build_primed_dictionary(const FourClassModel& m, int c0);

/// Lie expression over the primed generators with cst-polynomial scalars.
class OpExpr {
 public:
  enum class Kind { zero, gen, scale, sum, bracket };

  OpExpr();
  static OpExpr gen(Gen g);
  static OpExpr bracket(const OpExpr& a, const OpExpr& b);
  friend OpExpr operator+(const OpExpr& a, const OpExpr& b);
  friend OpExpr operator-(const OpExpr& a, const OpExpr& b);
  friend OpExpr operator*(const CstPoly& c, const OpExpr& a);
  OpExpr operator-() const;

  Kind kind() const;
  Gen generator() const;
  const CstPoly& coefficient() const;
  const std::vector<OpExpr>& children() const;
  std::string str() const;

 private:
  struct Node;
  explicit OpExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

CstOp evaluate(const OpExpr& x, const OperatorDictionary& dict);

using Combo = std::map<Gen, CstPoly>;
OpExpr to_expr(const Combo& c);
std::string combo_str(const Combo& c);

/// Action of the Fourier transform on primed generators, linear on raising
/// and on lowering operators and extended to brackets.
struct FourierOpMap {
  int c0 = 1;
  int c1 = 1;
  std::map<Gen, Combo> images;

  OpExpr apply(const OpExpr& x) const;
};

/// E'_a -> c1 E'_t, E'_t -> c1(-E'_a + cst E'_h), E'_b -> c1 c0 E'_h,
/// E'_h -> -c1 c0 E'_b, and F'_a -> c1 F'_t, F'_t -> -c1 F'_a + cst F'_h,
/// F'_b -> c1 c0 F'_h, F'_h -> -c1 c0 F'_b.
FourierOpMap fourier_op_map(int c0, int c1, const CstPoly& cst = CstPoly::x(Var::cst));

struct TripleExprs {
  OpExpr e0;         // c0 [F'_a, E'_t]
  OpExpr f0_mapped;  // -F(e0)
  OpExpr f0;         // c0 [F'_t, E'_a]
  OpExpr h0;         // [e0, f0]
};
TripleExprs triple_exprs(const FourierOpMap& map);

struct Triple {
  CstOp e0;
  CstOp f0;
  CstOp h0;
};
Triple build_triple(const OperatorDictionary& dict, const FourierOpMap& map);

nlohmann::ordered_json triple_params(int g, int c0, int c1, const FourClassModel& m);

/// Construction of (e0, h0, f0) with symbolic cst.
std::vector<Report> verify_triple(const FourClassModel& m, int g, int c0, int c1);
/// F(e0) = -f0, F(f0) = -e0, F(h0) = -h0.
std::vector<Report> verify_fourier_conjugacy(const FourClassModel& m, int g, int c0, int c1);
/// Generator images agree with the class-level Fourier matrix through
/// alpha <-> E'_a, beta <-> E'_b, Thetabar <-> E'_t, Hyp <-> E'_h when
/// cst = g + 1.
std::vector<Report> verify_op_map_compatibility(int g, int c0, int c1);
/// Same on a given space, which must carry Theta and Hyp.
std::vector<Report> verify_op_map_compatibility(const SpacePtr& space, int c0, int c1);

}  // namespace beauville
