#include <doctest.h>

#include <random>

#include "nilcenter/series.hpp"

using namespace nilcenter;

namespace {

Coef sym(const char* s) { return Coef::symbol(s); }

Poly2 x2() { return Poly2::variable(0); }
Poly2 y2() { return Poly2::variable(1); }

Coef random_coef(std::mt19937& rng) {
  std::uniform_int_distribution<int> small(-3, 3);
  const char* names[] = {"a", "b", "c"};
  Coef num(small(rng));
  for (int i = 0; i < 2; ++i) num += Coef(small(rng)) * sym(names[rng() % 3]);
  Coef den(1 + rng() % 3);
  den += Coef(small(rng)) * sym(names[rng() % 3]);
  if (den.is_zero()) den = Coef(1);
  return num / den;
}

}  // namespace

TEST_CASE("param poly basics") {
  ParamPoly a = ParamPoly::symbol("a"), b = ParamPoly::symbol("b");
  ParamPoly p = (a + b) * (a - b);
  CHECK(p == a * a - b * b);
  CHECK(p.degree() == 2);
  auto q = ParamPoly::divide_exact(p, a + b);
  REQUIRE(q);
  CHECK(*q == a - b);
  CHECK_FALSE(ParamPoly::divide_exact(p, a + b + ParamPoly(mpq_class(1))));
  CHECK((a.pow(3) * b).monomial_content() == ParamMonomial{{"a", 3}, {"b", 1}});
  CHECK(ParamPoly(mpq_class(3, 4)).scaled(2).constant_value() == mpq_class(3, 2));
}

TEST_CASE("coefficient field identities") {
  const Coef lambda = sym("lambda");
  CHECK((Coef(1) / lambda) + (lambda - 1) / lambda == Coef(1));
  CHECK(((lambda + 1) * (lambda + 1)) / (lambda + 1) == lambda + 1);
  CHECK(Coef::rational(2, 4) == Coef::rational(1, 2));
  CHECK((lambda / lambda).is_one());
  CHECK((lambda - lambda).is_zero());
  CHECK((Coef(2) * lambda).to_string() == "2*lambda");
  CHECK(((Coef(1) / lambda) * 3).to_string() == "3/(lambda)");
  CHECK(lambda.evaluate({{"lambda", 2}}) == Coef(2));
  CHECK_THROWS_AS((Coef(1) / lambda).evaluate({{"lambda", 0}}), PreconditionError);
  CHECK_THROWS_AS(Coef(1) / Coef(0), PreconditionError);
}

TEST_CASE("randomized field axioms hold by cross-multiplication") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 60; ++trial) {
    const Coef u = random_coef(rng), v = random_coef(rng), w = random_coef(rng);
    CHECK((u + v) + w == u + (v + w));
    CHECK((u * v) * w == u * (v * w));
    CHECK(u * (v + w) == u * v + u * w);
    CHECK(u + v == v + u);
    CHECK(u - u == Coef(0));
    if (!u.is_zero()) CHECK(u * u.inverse() == Coef(1));
  }
}

TEST_CASE("ring arithmetic and truncation") {
  CHECK((x2() + y2()) * (x2() - y2()) == x2() * x2() - y2() * y2());
  const Jet1 a(Poly1::variable(0), 2);
  const Jet1 b(Poly1::monomial({2}), 2);
  const Jet1 prod = a * b;
  CHECK(prod.poly().is_zero());
  CHECK(prod.order() == 2);
  const Coef lambda = sym("lambda");
  Poly1 s = Poly1::variable(0).scaled(Coef(1) / lambda) + Poly1::variable(0).scaled((lambda - 1) / lambda);
  CHECK(s == Poly1::variable(0));
}

TEST_CASE("partial derivatives") {
  CHECK(Poly3::monomial({2, 1, 0}).partial(0) == Poly3::monomial({1, 1, 0}, 2));
  CHECK(Poly3::monomial({0, 3, 0}).partial(2).is_zero());
  CHECK(Poly3::monomial({1, 2, 1}).partial(1) == Poly3::monomial({1, 1, 1}, 2));
  CHECK(Jet3(Poly3::monomial({2, 0, 0}), 5).partial(0).order() == 4);
}

TEST_CASE("substitute z") {
  const Jet3 z2 = Jet3::exact(Poly3::monomial({0, 0, 2}));
  CHECK(substitute_z(z2, Jet2::exact(Poly2::monomial({2, 0}))).poly() == Poly2::monomial({4, 0}));
  const Jet3 ypz = Jet3::exact(Poly3::variable(1) + Poly3::variable(2));
  CHECK(substitute_z(ypz, Jet2(Poly2(), 6)).poly() == y2());
  const Coef h20 = sym("c200") / sym("lambda");
  const Jet2 h(Poly2::monomial({2, 0}, h20), 4);
  const Jet2 r = substitute_z(Jet3::exact(Poly3::monomial({1, 0, 1})), h);
  CHECK(r.poly() == Poly2::monomial({3, 0}, h20));
  CHECK(r.order() == 4);
  const Jet2 shifted(Poly2(Coef(1)) + x2(), 3);
  CHECK_THROWS_AS(substitute_z(Jet3(Poly3::variable(2), 3), shifted), OrderError);
}

TEST_CASE("implicit solve") {
  const Jet1 F = implicit_solve(Jet2(y2() + x2() * x2(), 8));
  CHECK(F.poly() == Poly1::monomial({2}, -1));
  CHECK(implicit_solve(Jet2(y2(), 8)).poly().is_zero());
  CHECK_THROWS_AS(implicit_solve(Jet2(x2() * y2(), 5)), SingularImplicitError);

  // Back-substitution oracle on a nonlinear G with symbolic coefficients.
  const Coef a = sym("a");
  Poly2 g = y2() + x2() * y2().scaled(a) + x2() * x2() * x2() + y2() * y2() * x2().scaled(3);
  const Jet2 G(g, 10);
  const Jet1 sol = implicit_solve(G);
  const Jet1 back = compose<2, 1>(G, {Jet1::exact(Poly1::variable(0)), sol});
  CHECK(back.poly().is_zero());
  CHECK(back.order() == 10);
}

TEST_CASE("monomial basis dimensions") {
  for (int n = 1; n <= 10; ++n) CHECK(monomial_basis<3>(n).size() == std::size_t((n + 1) * (n + 2) / 2));
  CHECK(monomial_basis<2>(3).size() == 4);
}

TEST_CASE("truncation coherence of implicit solve") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    Poly2 g = y2();
    for (const auto& e : monomial_basis<2>(2)) g.add_term(e, Coef(d(rng)));
    for (const auto& e : monomial_basis<2>(3)) g.add_term(e, Coef::rational(d(rng), 3));
    const Jet1 lo = implicit_solve(Jet2(g, 6));
    const Jet1 hi = implicit_solve(Jet2(g, 8));
    CHECK(hi.poly().truncated(6) == lo.poly());
  }
}
