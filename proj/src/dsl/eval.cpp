#include "beauville/dsl/eval.hpp"

#include <optional>

#include "beauville/error.hpp"
#include "beauville/llv/verify.hpp"
#include "beauville/taut/push.hpp"

namespace beauville {

EvalContext parse_context(const std::string& name) {
  if (name == "llv") return EvalContext::llv;
  if (name == "k3") return EvalContext::k3;
  if (name == "taut") return EvalContext::taut;
  throw InvalidArgument("unknown context '" + name + "' (llv, k3, taut)");
}

const char* context_name(EvalContext c) {
  switch (c) {
    case EvalContext::llv: return "llv";
    case EvalContext::k3: return "k3";
    case EvalContext::taut: return "taut";
  }
  return "?";
}

namespace {

using G = GaussianRational;

[[noreturn]] void bad(const Ast& at, const std::string& msg) {
  throw InvalidArgument(msg + " at line " + std::to_string(at.line) + ", column " + std::to_string(at.column));
}

int small_int(const Ast& x) {
  if (x.kind != Ast::Kind::literal || !x.value.is_integer()) bad(x, "expected an index");
  return static_cast<int>(x.value.num().get_si());
}

void arity(const Ast& x, std::size_t n) {
  if (x.args.size() != n) bad(x, x.name + " takes " + std::to_string(n) + " argument(s)");
}

// ---------------------------------------------------------------------------

class LlvEval {
 public:
  explicit LlvEval(const EvalParams& p)
      : m_(p.seed == 0 ? FourClassModel::standard(p.hdim, p.t) : FourClassModel::rotated(p.hdim, p.t, p.seed)) {}

  Value run(const Ast& x) {
    switch (x.kind) {
      case Ast::Kind::literal: return G(x.value);
      case Ast::Kind::imag: return G::i();
      case Ast::Kind::symbol: return symbol(x);
      case Ast::Kind::call: return call(x);
      case Ast::Kind::bracket: return Value(mat_bracket(op(x.args[0]), op(x.args[1])));
      case Ast::Kind::compose: bad(x, "composition is for correspondences (k3 context)");
      case Ast::Kind::product: return mul(x, run(*x.args[0]), run(*x.args[1]));
      case Ast::Kind::power: {
        Value base = run(*x.args[0]);
        Value acc = std::holds_alternative<Op>(base) ? Value(identity<G>(m_.hdim())) : Value(G(1));
        for (unsigned k = 0; k < x.exponent; ++k) acc = mul(x, acc, base);
        return acc;
      }
      case Ast::Kind::sum: {
        std::optional<Value> acc;
        for (std::size_t k = 0; k < x.args.size(); ++k) {
          Value v = run(*x.args[k]);
          if (x.signs[k] < 0) v = mul(x, G(-1), v);
          acc = acc ? add(x, *acc, v) : v;
        }
        return *acc;
      }
    }
    bad(x, "unexpected node");
  }

 private:
  Op op(const AstPtr& a) {
    Value v = run(*a);
    if (!std::holds_alternative<Op>(v)) bad(*a, "expected an operator");
    return std::get<Op>(v);
  }

  Value symbol(const Ast& x) {
    if (x.name == "h") return op_h(*m_.space());
    if (x.name == "L" || x.name == "Lambda" || x.name == "H") {
      const LhLambda e = lhl_elements(m_);
      return x.name == "L" ? e.L : (x.name == "H" ? e.H : e.Lambda);
    }
    bad(x, "'" + x.name + "' is not available in the llv context");
  }

  Value call(const Ast& x) {
    if (x.name == "K") {
      arity(x, 2);
      return op_K(m_, small_int(*x.args[0]), small_int(*x.args[1]));
    }
    if (x.name == "e" || x.name == "f") {
      arity(x, 1);
      const bool e = x.name == "e";
      const Ast& a = *x.args[0];
      if (a.kind == Ast::Kind::call && (a.name == "sigma" || a.name == "sigbar")) {
        arity(a, 2);
        const int i = small_int(*a.args[0]), j = small_int(*a.args[1]);
        if (a.name == "sigma") return e ? e_sigma(m_, i, j) : f_sigma(m_, i, j);
        return e ? e_sigbar(m_, i, j) : f_sigbar(m_, i, j);
      }
      const int i = small_int(a);
      if (i < 1 || i > 4) bad(a, "eta index must be 1..4");
      return e ? op_e(m_.eta(i)) : op_f(m_.eta(i));
    }
    bad(x, "'" + x.name + "' is not available in the llv context");
  }

  Value mul(const Ast& at, const Value& a, const Value& b) {
    const bool as = std::holds_alternative<G>(a), bs = std::holds_alternative<G>(b);
    if (as && bs) return std::get<G>(a) * std::get<G>(b);
    if (as) return mat_scale(std::get<G>(a), std::get<Op>(b));
    if (bs) return mat_scale(std::get<G>(b), std::get<Op>(a));
    (void)at;
    return mat_mul(std::get<Op>(a), std::get<Op>(b));
  }

  Value add(const Ast& at, const Value& a, const Value& b) {
    const bool as = std::holds_alternative<G>(a), bs = std::holds_alternative<G>(b);
    if (as && bs) return std::get<G>(a) + std::get<G>(b);
    if (as != bs) bad(at, "cannot add a scalar and an operator");
    return mat_add(std::get<Op>(a), std::get<Op>(b));
  }

  FourClassModel m_;
};

// ---------------------------------------------------------------------------

class K3Eval {
 public:
  Value run(const Ast& x) {
    switch (x.kind) {
      case Ast::Kind::literal: return G(x.value);
      case Ast::Kind::imag: bad(x, "no imaginary unit in the k3 context");
      case Ast::Kind::symbol: return symbol(x);
      case Ast::Kind::call: return call(x);
      case Ast::Kind::bracket: return commutator(corr(x.args[0]), corr(x.args[1]));
      case Ast::Kind::compose: return compose(corr(x.args[0]), corr(x.args[1]));
      case Ast::Kind::product: return mul(x, run(*x.args[0]), run(*x.args[1]));
      case Ast::Kind::power: {
        const Value base = run(*x.args[0]);
        if (x.exponent == 0) bad(x, "zeroth powers are ambiguous here");
        Value acc = base;
        for (unsigned k = 1; k < x.exponent; ++k) acc = mul(x, acc, base);
        return acc;
      }
      case Ast::Kind::sum: {
        std::optional<Value> acc;
        for (std::size_t k = 0; k < x.args.size(); ++k) {
          Value v = run(*x.args[k]);
          if (x.signs[k] < 0) v = mul(x, G(-1), v);
          acc = acc ? add(x, *acc, v) : v;
        }
        return *acc;
      }
    }
    bad(x, "unexpected node");
  }

 private:
  static Rational real(const Ast& at, const G& z) {
    if (!z.is_real()) bad(at, "k3 scalars are rational");
    return z.re();
  }

  BvClass cls(const AstPtr& a) {
    Value v = run(*a);
    if (std::holds_alternative<G>(v)) return real(*a, std::get<G>(v)) * BvClass(Bv::one);
    if (!std::holds_alternative<BvClass>(v)) bad(*a, "expected a class on S");
    return std::get<BvClass>(v);
  }

  Corr corr(const AstPtr& a) {
    Value v = run(*a);
    if (!std::holds_alternative<Corr>(v)) bad(*a, "expected a correspondence");
    return std::get<Corr>(v);
  }

  Value symbol(const Ast& x) {
    if (x.name == "Theta") return BvClass::theta();
    if (x.name == "s") return BvClass(Bv::s);
    if (x.name == "f") return BvClass(Bv::f);
    if (x.name == "c") return BvClass(Bv::c);
    if (x.name == "F") return Corr::F();
    if (x.name == "Finv") return Corr::Finv();
    if (x.name == "Delta") return Corr::of(rel_diagonal());
    if (x.name == "e0" || x.name == "f0" || x.name == "h0") {
      const MotivicTriple m = build_motivic_sl2();
      return x.name == "e0" ? m.e0 : (x.name == "f0" ? m.f0 : m.h0);
    }
    bad(x, "'" + x.name + "' is not available in the k3 context");
  }

  Value call(const Ast& x) {
    if (x.name == "p1" || x.name == "p2" || x.name == "Delta") {
      arity(x, 1);
      const BvClass a = cls(x.args[0]);
      if (x.name == "p1") return Corr::of(p1(a));
      if (x.name == "p2") return Corr::of(p2(a));
      return Corr::of(diag_push(a));
    }
    bad(x, "'" + x.name + "' is not available in the k3 context");
  }

  Value mul(const Ast& at, const Value& a, const Value& b) {
    if (std::holds_alternative<G>(a)) return scale(at, real(at, std::get<G>(a)), b);
    if (std::holds_alternative<G>(b)) return scale(at, real(at, std::get<G>(b)), a);
    if (std::holds_alternative<BvClass>(a) && std::holds_alternative<BvClass>(b)) {
      return std::get<BvClass>(a) * std::get<BvClass>(b);
    }
    if (std::holds_alternative<Corr>(a) && std::holds_alternative<Corr>(b)) {
      const Corr& u = std::get<Corr>(a);
      const Corr& v = std::get<Corr>(b);
      if (!u.fourier.is_zero() || !u.inverse.is_zero() || !v.fourier.is_zero() || !v.inverse.is_zero()) {
        throw OutsideModel("intersection products with the Fourier kernel");
      }
      return Corr::of(rel_mul(u.cycle, v.cycle));
    }
    bad(at, "cannot multiply a class on S with a correspondence");
  }

  static Value scale(const Ast& at, const Rational& k, const Value& v) {
    if (std::holds_alternative<G>(v)) return G(k) * std::get<G>(v);
    if (std::holds_alternative<BvClass>(v)) return k * std::get<BvClass>(v);
    if (std::holds_alternative<Corr>(v)) return k * std::get<Corr>(v);
    bad(at, "unexpected value");
  }

  Value add(const Ast& at, const Value& a, const Value& b) {
    if (std::holds_alternative<G>(a) && std::holds_alternative<G>(b)) return std::get<G>(a) + std::get<G>(b);
    if (std::holds_alternative<Corr>(a) && std::holds_alternative<Corr>(b)) return std::get<Corr>(a) + std::get<Corr>(b);
    const auto as_cls = [&](const Value& v) -> BvClass {
      if (std::holds_alternative<G>(v)) return real(at, std::get<G>(v)) * BvClass(Bv::one);
      if (std::holds_alternative<BvClass>(v)) return std::get<BvClass>(v);
      bad(at, "cannot add a class on S and a correspondence");
    };
    return as_cls(a) + as_cls(b);
  }
};

// ---------------------------------------------------------------------------

class TautEval {
 public:
  explicit TautEval(const EvalParams& p) : g_(p.genus), locus_(p.locus) {}

  Value run(const Ast& x) { return run(x, locus_); }

 private:
  Value run(const Ast& x, Locus where) {
    switch (x.kind) {
      case Ast::Kind::literal: return RatPoly(x.value);
      case Ast::Kind::imag: bad(x, "no imaginary unit in the taut context");
      case Ast::Kind::symbol: {
        if (x.name == "a") return RatPoly::x(Var::a);
        if (x.name == "b") return RatPoly::x(Var::b);
        for (int k = 0; k < kTautGens; ++k) {
          const auto gen = static_cast<TautGen>(k);
          if (x.name == taut_gen_name(gen)) {
            if (!allows(where, gen)) bad(x, x.name + " does not live on the " + locus_name(where) + " locus");
            return TautExpr::gen(where, g_, gen);
          }
        }
        bad(x, "'" + x.name + "' is not available in the taut context");
      }
      case Ast::Kind::call: {
        arity(x, 1);
        if (x.name == "push") {
          PushContext ctx = push_context(g_);
          return abelian_push(expr(*x.args[0], where), ctx);
        }
        if (x.name == "pull") return boundary_pull(expr(*x.args[0], where));
        bad(x, "'" + x.name + "' is not available in the taut context");
      }
      case Ast::Kind::bracket:
      case Ast::Kind::compose: bad(x, "brackets and composition are not defined on tautological classes");
      case Ast::Kind::product: return mul(run(*x.args[0], where), run(*x.args[1], where));
      case Ast::Kind::power: {
        const Value base = run(*x.args[0], where);
        Value acc = RatPoly(1);
        for (unsigned k = 0; k < x.exponent; ++k) acc = mul(acc, base);
        return acc;
      }
      case Ast::Kind::sum: {
        std::optional<Value> acc;
        for (std::size_t k = 0; k < x.args.size(); ++k) {
          Value v = run(*x.args[k], where);
          if (x.signs[k] < 0) v = mul(RatPoly(-1), v);
          acc = acc ? add(*acc, v) : v;
        }
        return *acc;
      }
    }
    bad(x, "unexpected node");
  }

  TautExpr expr(const Ast& x, Locus where) {
    Value v = run(x, where);
    if (std::holds_alternative<RatPoly>(v)) return TautExpr::scalar(where, g_, std::get<RatPoly>(v));
    return std::get<TautExpr>(v);
  }

  static Value mul(const Value& a, const Value& b) {
    const bool as = std::holds_alternative<RatPoly>(a), bs = std::holds_alternative<RatPoly>(b);
    if (as && bs) return std::get<RatPoly>(a) * std::get<RatPoly>(b);
    if (as) return std::get<RatPoly>(a) * std::get<TautExpr>(b);
    if (bs) return std::get<RatPoly>(b) * std::get<TautExpr>(a);
    return std::get<TautExpr>(a) * std::get<TautExpr>(b);
  }

  static Value add(const Value& a, const Value& b) {
    const bool as = std::holds_alternative<RatPoly>(a), bs = std::holds_alternative<RatPoly>(b);
    if (as && bs) return std::get<RatPoly>(a) + std::get<RatPoly>(b);
    if (as) {
      const TautExpr& y = std::get<TautExpr>(b);
      return TautExpr::scalar(y.locus(), y.genus(), std::get<RatPoly>(a)) + y;
    }
    if (bs) {
      const TautExpr& y = std::get<TautExpr>(a);
      return y + TautExpr::scalar(y.locus(), y.genus(), std::get<RatPoly>(b));
    }
    return std::get<TautExpr>(a) + std::get<TautExpr>(b);
  }

  int g_;
  Locus locus_;
};

}  // namespace

Value eval(const Ast& x, EvalContext ctx, const EvalParams& params) {
  switch (ctx) {
    case EvalContext::llv: return LlvEval(params).run(x);
    case EvalContext::k3: return K3Eval().run(x);
    case EvalContext::taut: return TautEval(params).run(x);
  }
  throw InvalidArgument("unknown context");
}

bool value_is_zero(const Value& v) {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Op>) {
          return is_zero(x);
        } else {
          return x.is_zero();
        }
      },
      v);
}

std::string value_str(const Value& v, EvalContext ctx, const EvalParams& params) {
  if (std::holds_alternative<Op>(v)) {
    const Op& x = std::get<Op>(v);
    if (is_zero(x)) return "0";
    if (ctx != EvalContext::llv) throw InvalidArgument("operators only arise in the llv context");
    const auto m = params.seed == 0 ? FourClassModel::standard(params.hdim, params.t)
                                    : FourClassModel::rotated(params.hdim, params.t, params.seed);
    return op_str(x, *m.space());
  }
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Op>) {
          return "";
        } else {
          return x.str();
        }
      },
      v);
}

}  // namespace beauville
