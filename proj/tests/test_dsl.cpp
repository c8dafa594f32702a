#include "beauville/dsl/eval.hpp"
#include "beauville/error.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace beauville;

namespace {

Value run(const std::string& src, EvalContext c, const EvalParams& p = {}) { return eval(*parse(src), c, p); }

}  // namespace

TEST_CASE("parse shapes") {
  const AstPtr x = parse("[K(1,2), K(2,3)] - 2*K(1,3)");
  REQUIRE(x->kind == Ast::Kind::sum);
  CHECK(x->signs == std::vector<int>{1, -1});
  CHECK(x->args[0]->kind == Ast::Kind::bracket);
  CHECK(print(*x) == "[K(1, 2), K(2, 3)] - 2*K(1, 3)");
  CHECK(print(*parse("F o p1(Theta) o Finv")) == "F o p1(Theta) o Finv");
  CHECK(parse("F o p1(Theta) o Finv")->args[0]->kind == Ast::Kind::compose);
  CHECK(print(*parse("1/2*theta^2")) == "1/2*theta^2");
  CHECK(print(*parse("-(theta + delta)*b")) == "-(theta + delta)*b");
  CHECK(print(*parse("((h))")) == "h");
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    const AstPtr x = gen::ast(rng, 4);
    const std::string s = print(*x);
    INFO(s);
    const AstPtr y = parse(s);
    CHECK(*y == *x);
    CHECK(print(*y) == s);
  }
}

TEST_CASE("parse errors carry positions") {
  const auto at = [](const std::string& src) -> std::pair<std::size_t, std::size_t> {
    try {
      parse(src);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(at("e(") == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(at("h + foo") == std::pair<std::size_t, std::size_t>{1, 5});
  CHECK(at("h +\n  $") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(at("[h, h") == std::pair<std::size_t, std::size_t>{1, 6});
  CHECK(at("h^x") == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(at("h h") == std::pair<std::size_t, std::size_t>{1, 3});
}

TEST_CASE("llv evaluation") {
  CHECK(value_is_zero(run("[K(1,2), K(2,3)] - 2*K(1,3)", EvalContext::llv)));
  CHECK(value_is_zero(run("[h, e(1)] - 2*e(1)", EvalContext::llv)));
  CHECK(value_is_zero(run("[e(1), f(1)] - h", EvalContext::llv, {.hdim = 8, .t = Rational(-3)})));
  CHECK(!value_is_zero(run("e(1)", EvalContext::llv)));
  CHECK(std::get<GaussianRational>(run("(1 + i)^2", EvalContext::llv)) == GaussianRational(Rational(0), Rational(2)));
  CHECK_THROWS_AS(run("theta", EvalContext::llv), InvalidArgument);
  CHECK_THROWS_AS(run("h o h", EvalContext::llv), InvalidArgument);
  CHECK_THROWS_AS(run("h + 1", EvalContext::llv), InvalidArgument);
}

TEST_CASE("k3 evaluation") {
  const Value a = run("Delta*p1(Theta)", EvalContext::k3);
  const Value b = run("Delta(Theta)", EvalContext::k3);
  CHECK(std::get<Corr>(a) == std::get<Corr>(b));
  CHECK(value_is_zero(run("Delta(Theta) - p1(Theta)*p2(Theta)", EvalContext::k3)));
  CHECK(value_is_zero(run("[h0, e0] - 2*e0", EvalContext::k3)));
  CHECK(value_is_zero(run("Finv o F - Delta", EvalContext::k3)));
  CHECK(value_is_zero(run("Theta - s - f", EvalContext::k3)));
  CHECK_THROWS_AS(run("i*s", EvalContext::k3), InvalidArgument);
}

TEST_CASE("taut evaluation") {
  EvalParams p;
  p.genus = 3;
  p.locus = Locus::boundary;
  const TautExpr one = TautExpr::scalar(Locus::boundary_base, 3, RatPoly(1));
  CHECK(std::get<TautExpr>(run("push(1/2*theta^2)", EvalContext::taut, p)) == one);
  p.locus = Locus::total;
  p.genus = 5;
  const Value th = run("1/720*push(theta^6)", EvalContext::taut, p);
  CHECK(value_str(th, EvalContext::taut, p) == "1/48*delta");
  CHECK(value_str(run("(1 + b)^2", EvalContext::taut, p), EvalContext::taut, p) == "1 + 2*b + b^2");
  CHECK_THROWS_AS(run("xi2", EvalContext::taut, p), InvalidArgument);
  CHECK_THROWS_AS(run("a*b", EvalContext::taut, p), Error);
}
