#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "beauville/dsl/ast.hpp"
#include "beauville/k3/relative.hpp"
#include "beauville/llv/model.hpp"
#include "beauville/taut/expr.hpp"

namespace beauville {

enum class EvalContext { llv, k3, taut };

EvalContext parse_context(const std::string& name);  // InvalidArgument on unknown names
const char* context_name(EvalContext c);

struct EvalParams {
  // llv: the four class model
  int hdim = 6;
  Rational t{1};
  std::uint64_t seed = 0;  // 0: standard eta, otherwise a seeded rotation
  // taut
  int genus = 3;
  Locus locus = Locus::total;
};

/// Scalars of llv and k3 are Gaussian rationals, those of taut polynomials
/// in a or b.
using Value = std::variant<GaussianRational, Op, BvClass, Corr, RatPoly, TautExpr>;

/// Symbols not available in the context raise InvalidArgument naming the
/// source position; rewrites outside the model raise OutsideModel.
Value eval(const Ast& x, EvalContext ctx, const EvalParams& params = {});

bool value_is_zero(const Value& v);
std::string value_str(const Value& v, EvalContext ctx, const EvalParams& params = {});

}  // namespace beauville
