#include <doctest.h>

#include <random>

#include "nilcenter/linops.hpp"
#include "nilcenter/series.hpp"

using namespace nilcenter;

namespace {

Poly3 mono(int j, int k, int l, const Coef& c = Coef(1)) { return Poly3::monomial({j, k, l}, c); }

Poly3 random_homogeneous(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-9, 9);
  Poly3 q;
  for (const auto& e : monomial_basis<3>(n))
    if (rng() % 3) q.add_term(e, Coef::rational(d(rng), 1 + rng() % 4));
  return q;
}

std::vector<Coef> as_vector(const Poly3& p, int n) {
  std::vector<Coef> v;
  for (const auto& e : monomial_basis<3>(n)) v.push_back(p.coeff(e));
  return v;
}

}  // namespace

TEST_CASE("operator examples") {
  const Coef lam = Coef::symbol("lambda");
  for (int n = 2; n <= 6; ++n) {
    CHECK(HomogOperator{OpKind::T, n, lam}.apply(mono(0, n, 0)).is_zero());
    CHECK(HomogOperator{OpKind::L, n, lam}.apply(mono(0, n - 1, 1)).is_zero());
    CHECK(HomogOperator{OpKind::TTilde, n, lam}.apply(mono(n, 0, 0)).is_zero());
    CHECK(HomogOperator{OpKind::LTilde, n, lam}.apply(mono(n - 1, 0, 1)).is_zero());
  }
  CHECK(HomogOperator{OpKind::T, 3, lam}.apply(mono(3, 0, 0)) == mono(2, 1, 0, 3));
  const HomogOperator T3{OpKind::T, 3, lam};
  CHECK_THROWS_AS(T3.apply(mono(2, 0, 0)), PreconditionError);
}

TEST_CASE("kernels and complements for n = 2..8") {
  const Coef lam = Coef::rational(3, 2);
  for (int n = 2; n <= 8; ++n) {
    const auto basis = monomial_basis<3>(n);
    CHECK(basis.size() == std::size_t((n + 1) * (n + 2) / 2));
    struct Case {
      OpKind kind;
      Poly3 kernel;
      Poly3 complement;
    } cases[] = {{OpKind::T, mono(0, n, 0), mono(n, 0, 0)},
                 {OpKind::L, mono(0, n - 1, 1), mono(n - 1, 0, 1)},
                 {OpKind::TTilde, mono(n, 0, 0), mono(0, n, 0)},
                 {OpKind::LTilde, mono(n - 1, 0, 1), mono(0, n - 1, 1)}};
    for (const auto& c : cases) {
      const auto m = HomogOperator{c.kind, n, lam}.matrix();
      const auto ker = null_space(m);
      REQUIRE(ker.size() == 1);
      CHECK(ker[0] == as_vector(c.kernel, n));
      // complement is not in the image: appending it raises the rank to full.
      auto aug = m;
      const auto cv = as_vector(c.complement, n);
      for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(cv[i]);
      CHECK(rank(m) + 1 == int(basis.size()));
      CHECK(rank(aug) == int(basis.size()));
    }
  }
}

TEST_CASE("kernel is corank one for symbolic lambda too") {
  const Coef lam = Coef::symbol("lambda");
  for (int n = 2; n <= 5; ++n) {
    CHECK(null_space(HomogOperator{OpKind::T, n, lam}.matrix()).size() == 1);
    CHECK(null_space(HomogOperator{OpKind::L, n, lam}.matrix()).size() == 1);
  }
}

TEST_CASE("solve_T examples") {
  const Coef lam = Coef::symbol("lambda");
  // q = 2 x^2 y: T(p) = -2 x^2 y with p = -(2/3) x^3.
  const auto r = solve_T(mono(2, 1, 0, 2), 3, lam);
  CHECK(r.p == mono(3, 0, 0, Coef::rational(-2, 3)));
  CHECK(r.residue.is_zero());
  for (int n = 2; n <= 6; ++n) {
    const auto s = solve_T(mono(n, 0, 0), n, lam);
    CHECK(s.p.is_zero());
    CHECK(s.residue == Coef(1));
  }
}

TEST_CASE("solve_L examples") {
  const Coef lam = Coef::symbol("lambda");
  for (int n = 2; n <= 6; ++n) {
    const auto s = solve_L(mono(n - 1, 0, 1), n, lam);
    CHECK(s.p.is_zero());
    CHECK(s.residue == Coef(1));
    const HomogOperator L{OpKind::L, n, lam};
    const Poly3 q = mono(0, n - 1, 1, lam);
    const auto t = solve_L(q, n, lam);
    CHECK((L.apply(t.p) + q - mono(n - 1, 0, 1, t.residue)).is_zero());
    CHECK(t.p.coeff({0, n - 1, 1}).is_zero());
    const auto u = solve_L(mono(n, 0, 0), n, lam);
    CHECK(u.residue.is_zero());
    CHECK(L.apply(u.p) == -mono(n, 0, 0));
  }
}

TEST_CASE("randomized residuals are identically zero") {
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 7;
    int num = int(rng() % 7) - 3;
    if (num == 0) num = 2;
    const Coef lam = trial % 2 ? Coef::rational(num, 1 + rng() % 3) : Coef::symbol("lambda");
    const Poly3 q = random_homogeneous(rng, n);
    const auto t = solve_T(q, n, lam);
    CHECK((HomogOperator{OpKind::T, n, lam}.apply(t.p) + q - mono(n, 0, 0, t.residue)).is_zero());
    CHECK(t.p.coeff({0, n, 0}).is_zero());
    const auto l = solve_L(q, n, lam);
    CHECK((HomogOperator{OpKind::L, n, lam}.apply(l.p) + q - mono(n - 1, 0, 1, l.residue)).is_zero());
    CHECK(l.p.coeff({0, n - 1, 1}).is_zero());
  }
}

TEST_CASE("solve_T is linear in q") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const Coef lam = Coef::rational(1 + trial % 4, 1 + trial % 3);
    const Poly3 a = random_homogeneous(rng, n), b = random_homogeneous(rng, n);
    const auto ra = solve_T(a, n, lam), rb = solve_T(b, n, lam), rab = solve_T(a + b, n, lam);
    CHECK(rab.p == ra.p + rb.p);
    CHECK(rab.residue == ra.residue + rb.residue);
  }
}
