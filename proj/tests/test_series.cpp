#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hforge/parse.hpp"
#include "hforge/series.hpp"

using namespace hforge;

namespace {

// family chart of y^2 = Q0(x) for given n, with symbolic a_i, b_i
ChartPtr curve_chart(int n) {
  std::vector<std::string> coords;
  for (int i = 1; i <= n; ++i) coords.push_back(n == 1 ? "a" : "a" + std::to_string(i));
  for (int i = 1; i <= n; ++i) coords.push_back(n == 1 ? "b" : "b" + std::to_string(i));
  auto c = Chart::make("curve" + std::to_string(n), coords, {"x"});
  auto& tab = SymbolTable::instance();
  Poly x = Poly::variable(tab.intern("x"));
  Poly D = x.pow(2 * n + 1);
  for (int i = 1; i <= n; ++i) {
    Poly ai = Poly::variable(tab.intern(n == 1 ? "a" : "a" + std::to_string(i)));
    Poly bi = Poly::variable(tab.intern(n == 1 ? "b" : "b" + std::to_string(i)));
    D = D + ai * x.pow(n + i - 1) + bi * x.pow(i - 1);
  }
  c->add_root("y", D);
  return c;
}

}  // namespace

TEST_CASE("geometric series at a finite point") {
  auto C = curve_chart(1);
  Fe f = parse_expression(C, "1/(1-x)");
  Puiseux s = expand_at_point(f, "x", Fe::integer(C, 0), 3);
  CHECK(s.coeff_key(0).is_one());
  CHECK(s.coeff_key(1).is_one());
  CHECK(s.coeff_key(2).is_one());
  CHECK(s.trunc == 3);
}

TEST_CASE("pole expansion at a finite point") {
  auto C = curve_chart(1);
  Fe q = parse_expression(C, "a");  // expand about x = a
  Fe f = parse_expression(C, "(x+a)/(x-a)^2");
  Puiseux s = expand_at_point(f, "x", q, 2);
  CHECK(s.coeff_key(-2) == parse_expression(C, "2*a"));
  CHECK(s.coeff_key(-1).is_one());
  CHECK(s.coeff_key(0).is_zero());
}

TEST_CASE("branch series: y and 1/y at infinity") {
  for (int n : {1, 2}) {
    auto C = curve_chart(n);
    Puiseux y = root_branch_at_infinity(C, "x", 24);
    // y^2 - Q0(1/xt) = O(truncation)
    Puiseux y2 = y * y;
    Fe Q0 = Fe::from_poly(C, C->root_rhs(C->var("y")));
    Puiseux q0s = expand_at_infinity(Q0, "x", 12).lifted(2);
    Puiseux diff = (y2 - q0s).truncated(std::min(y2.trunc, q0s.trunc));
    CHECK(diff.known_zero());
    // printed leading behaviour of 1/y: xt^{n+1/2} - (1/2) a_n xt^{n+2} + O(xt^{n+3})
    Fe yinv = Fe::integer(C, 1) / parse_expression(C, "y");
    Puiseux s = expand_at_infinity(yinv, "x", 3 * n + 8);
    CHECK(s.coeff_key(2 * n + 1).is_one());
    CHECK(s.coeff_key(2 * n + 2).is_zero());
    CHECK(s.coeff_key(2 * n + 3).is_zero());
    CHECK(s.coeff_key(2 * n + 4).is_zero());
    // next term sits two full steps above the leading half-odd exponent
    std::string an = (n == 1) ? "a" : "a" + std::to_string(n);
    CHECK(s.coeff_key(2 * n + 5) == parse_expression(C, "-" + an + "/2"));
  }
}

TEST_CASE("series multiplication is a ring morphism to truncation") {
  auto C = curve_chart(1);
  Fe f = parse_expression(C, "(x^2+a)/(x-b)");
  Fe g = parse_expression(C, "1/(x^3 - a*x + 1)");
  Puiseux sf = expand_at_infinity(f, "x", 9);
  Puiseux sg = expand_at_infinity(g, "x", 9);
  Puiseux sfg = expand_at_infinity(f * g, "x", 9);
  Puiseux diff = (sf * sg - sfg).truncated(sfg.trunc);
  CHECK(diff.known_zero());
}

TEST_CASE("antiderivative") {
  auto C = curve_chart(1);
  Puiseux z = Puiseux::zero(C, 1, 10, "s");
  CHECK(z.antiderivative().known_zero());

  Puiseux s = Puiseux::zero(C, 1, 10, "s");
  s.c.emplace(-3, Fe::integer(C, 2));
  s.c.emplace(0, Fe::integer(C, 5));
  Puiseux a = s.antiderivative();
  CHECK(a.coeff_key(-2) == Fe::integer(C, -1));
  CHECK(a.coeff_key(1) == Fe::integer(C, 5));
  CHECK((a.derivative() - s).truncated(s.trunc).known_zero());

  Puiseux bad = s;
  bad.c.emplace(-1, Fe::integer(C, 1));
  CHECK(bad.has_residue());
  CHECK_THROWS_AS(bad.antiderivative(), engine_error);
}

TEST_CASE("antiderivative constant is irrelevant to residue pairings") {
  auto C = curve_chart(1);
  // two residue-free differentials at infinity
  Fe u = parse_expression(C, "x/(2*y)");
  Fe v = parse_expression(C, "1/(2*y)");
  Puiseux su = expand_at_infinity(u, "x", 20);
  Puiseux sv_dx = expand_at_infinity(v, "x", 20).shifted(-4).scaled(Fe::integer(C, -1));
  CHECK_FALSE(sv_dx.has_residue());
  for (long cst : {0L, 1L}) {
    Puiseux phi = sv_dx.antiderivative();
    Puiseux shift = Puiseux::zero(C, 2, phi.trunc, phi.param);
    shift.c.emplace(0, Fe::integer(C, cst));
    Puiseux prod = su * (phi + shift);
    // pairing = coefficient of xt^1 of the product; independent of cst
    CHECK(prod.coeff_exp(1, 1) == parse_expression(C, "-1/2"));
  }
}

TEST_CASE("inversion error on unknown leading term") {
  auto C = curve_chart(1);
  Puiseux z = Puiseux::zero(C, 1, 5, "s");
  CHECK_THROWS_AS(z.inverted(), engine_error);
}
