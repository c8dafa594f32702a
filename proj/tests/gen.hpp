#pragma once

// Small seeded generators for the property tests.

#include <random>
#include <vector>

#include "beauville/exact/gaussian_rational.hpp"
#include "beauville/exact/matrix.hpp"

namespace gen {

using beauville::GaussianRational;
using beauville::Rational;

inline Rational rational(std::mt19937_64& rng, long span = 9, long den = 6) {
  std::uniform_int_distribution<long> n(-span, span);
  std::uniform_int_distribution<long> d(1, den);
  return Rational(n(rng), d(rng));
}

inline GaussianRational gauss(std::mt19937_64& rng) { return {rational(rng), rational(rng)}; }

inline beauville::SparseMat<GaussianRational> sparse(std::mt19937_64& rng, int n, int fill) {
  std::vector<beauville::Triplet<GaussianRational>> t;
  std::uniform_int_distribution<int> idx(0, n - 1);
  for (int k = 0; k < fill; ++k) t.emplace_back(idx(rng), idx(rng), gauss(rng));
  return beauville::sparse_from<GaussianRational>(n, n, t);
}

}  // namespace gen

#include "beauville/dsl/ast.hpp"

namespace gen {

/// Random well formed tree over every node kind, for print/parse round trips.
inline beauville::AstPtr ast(std::mt19937_64& rng, int depth) {
  using beauville::Ast;
  static const std::vector<std::string> syms{"h", "L", "Theta", "theta", "delta", "b", "F", "s"};
  static const std::vector<std::string> fns{"e", "K", "p1", "push", "Delta"};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 8);
  const auto any = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  switch (pick(rng)) {
    case 0: {
      const Rational r = rational(rng);
      return Ast::literal(r.sign() < 0 ? -r : r);
    }
    case 1: return any(6) == 0 ? Ast::imag() : Ast::symbol(syms[any(syms.size())]);
    case 2: return Ast::symbol(syms[any(syms.size())]);
    case 3: {
      std::vector<beauville::AstPtr> args{ast(rng, depth - 1)};
      if (any(3) == 0) args.push_back(ast(rng, depth - 1));
      return Ast::call(fns[any(fns.size())], std::move(args));
    }
    case 4: return Ast::bracket(ast(rng, depth - 1), ast(rng, depth - 1));
    case 5: return Ast::product(ast(rng, depth - 1), ast(rng, depth - 1));
    case 6: return Ast::compose(ast(rng, depth - 1), ast(rng, depth - 1));
    case 7: return Ast::power(ast(rng, depth - 1), static_cast<unsigned>(any(4)));
    default: {
      const std::size_t n = 1 + any(3);
      std::vector<beauville::AstPtr> t;
      std::vector<int> s;
      for (std::size_t k = 0; k < n; ++k) {
        t.push_back(ast(rng, depth - 1));
        s.push_back(any(2) ? 1 : -1);
      }
      if (n == 1) s[0] = -1;
      return Ast::sum(std::move(t), std::move(s));
    }
  }
}

}  // namespace gen
