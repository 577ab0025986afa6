#include <doctest.h>

#include <random>

#include "nilcenter/cmanifold.hpp"
#include "nilcenter/monodromy.hpp"
#include "nilcenter/parser.hpp"
#include "test_support.hpp"

using namespace nilcenter;
using testsupport::C;
using testsupport::source_path;

namespace {

AndreevData data_of(const SystemModel& s, int m) { return andreev_data(restrict_to(s, cm_jet(s, m))); }

}  // namespace

TEST_CASE("generic quadratic j^3 f and j^1 Phi") {
  const SystemModel s = load_system(source_path("systems/generic_quadratic.sys"));
  const auto& ps = s.params;
  const AndreevData d = data_of(s, 3);
  CHECK(coefficient(d.f, 0).is_zero());
  CHECK(coefficient(d.f, 1).is_zero());
  CHECK(coefficient(d.f, 2) == C("b200", ps));
  CHECK(coefficient(d.f, 3) == C("b101*c200/lambda - a200*b110", ps));
  CHECK(coefficient(d.Phi, 0).is_zero());
  CHECK(coefficient(d.Phi, 1) == C("2*a200 + b110", ps));
  CHECK(d.alpha == 2);
}

TEST_CASE("trivial system data") {
  const AndreevData d = data_of(load_system(source_path("systems/trivial.sys")), 6);
  CHECK(d.F.poly().is_zero());
  CHECK(d.f.poly() == Poly1::monomial({3}, -1));
  CHECK(d.Phi.poly().is_zero());
  CHECK(d.n == 2);
  CHECK(d.Delta == Coef(-8));
  const MonodromyVerdict v = classify_monodromy(d);
  CHECK(v.status == MonodromyVerdict::Status::Monodromic);
  CHECK(v.condition == MonodromyVerdict::Condition::I);
}

TEST_CASE("normal-form planar family closed forms") {
  // x' = y + x P1(x), y' = Q2(x) + y P1(x): F = -x P1, f = Q2 - x P1^2, Phi = 2 P1 + x P1'.
  const std::vector<std::string> ps = {"p1", "p2", "p3", "q3", "q4", "q5"};
  const Poly3 P1 = parse_polynomial("p1*x + p2*x^2 + p3*x^3", ps);
  const Poly3 Q2 = parse_polynomial("q3*x^3 + q4*x^4 + q5*x^5", ps);
  auto to2 = [](const Poly3& p) {
    Poly2 o;
    for (const auto& [e, c] : p.terms()) o.add_term({e[0], e[1]}, c);
    return o;
  };
  auto to1 = [](const Poly3& p, int order) {
    Poly1 o;
    for (const auto& [e, c] : p.terms())
      if (e[0] <= order) o.add_term({e[0]}, c);
    return o;
  };
  const Poly3 x = Poly3::variable(0), y = Poly3::variable(1);
  const int N = 7;
  PlanarSystem pl;
  pl.order = N;
  pl.X2 = Jet2(to2(x * P1), N);
  pl.Y2 = Jet2(to2(Q2 + y * P1), N);
  const AndreevData d = andreev_data(pl);
  CHECK(d.F.poly() == to1(-(x * P1), N));
  CHECK(d.f.poly() == to1(Q2 - x * P1 * P1, N));
  CHECK(d.Phi.poly() == to1(P1.scaled(2) + x * P1.partial(0), N - 1));
}

TEST_CASE("Kukles b101 = -1: monodromic, n = 2, condition i") {
  const SystemModel s = load_system(source_path("systems/kukles.sys"))
                            .substitute({{"b101", Coef(-1)}, {"b020", Coef(0)}, {"b011", Coef(0)}, {"b002", Coef(0)},
                                         {"c020", Coef(0)}});
  const MonodromyVerdict v = classify_monodromy(data_of(s, 6));
  CHECK(v.status == MonodromyVerdict::Status::Monodromic);
  CHECK(v.n == 2);
  CHECK(v.condition == MonodromyVerdict::Condition::I);
  CHECK(v.side_conditions.empty());
}

TEST_CASE("Kukles symbolic: decided by an assumption, else a side condition") {
  const SystemModel s = load_system(source_path("systems/kukles.sys"));
  const AndreevData d = data_of(s, 5);
  const MonodromyVerdict open = classify_monodromy(d);
  CHECK(open.status == MonodromyVerdict::Status::Monodromic);
  REQUIRE(open.side_conditions.items().size() == 1);
  CHECK(open.side_conditions.items()[0].rel == Relation::Negative);
  const SignContext ctx({parse_assumption("b101<0", s.params)});
  const MonodromyVerdict closed = classify_monodromy(d, ctx);
  CHECK(closed.status == MonodromyVerdict::Status::Monodromic);
  CHECK(closed.side_conditions.empty());
  const SignContext pos({parse_assumption("b101>0", s.params)});
  CHECK(classify_monodromy(d, pos).status == MonodromyVerdict::Status::NotMonodromic);
}

TEST_CASE("b200 = 1 is not monodromic") {
  const SystemModel s = load_system(source_path("systems/generic_quadratic.sys"));
  std::map<std::string, Coef> vals;
  for (const auto& p : s.params) vals[p] = Coef(0);
  vals["lambda"] = Coef(1);
  vals["b200"] = Coef(1);
  const MonodromyVerdict v = classify_monodromy(data_of(s.substitute(vals), 4));
  CHECK(v.status == MonodromyVerdict::Status::NotMonodromic);
  CHECK_THROWS_AS(andreev2_condition(s.substitute(vals)), PreconditionError);
}

TEST_CASE("dynamo: inequality and the lambda = -1/2 case") {
  const SystemModel s = load_system(source_path("systems/dynamo_general.sys"));
  const auto& ps = s.params;
  const Andreev2Condition c = andreev2_condition(s);
  CHECK(c.difference() == C("-lambda^3*(lambda + 1)", ps));
  CHECK(c.beta_flag.is_zero());
  for (const char* kappa : {"1", "-3", "7/2"}) {
    const SystemModel t = s.substitute({{"lambda", Coef::rational(-1, 2)}, {"kappa", C(kappa, {})}});
    const MonodromyVerdict v = classify_monodromy(data_of(t, 5));
    CHECK(v.status == MonodromyVerdict::Status::NotMonodromic);
  }
  const SystemModel u = s.substitute({{"lambda", Coef(2)}, {"kappa", Coef(1)}});
  CHECK(classify_monodromy(data_of(u, 5)).status == MonodromyVerdict::Status::Monodromic);
}

TEST_CASE("Andreev number 2 inequality, generic and instances") {
  const SystemModel g = load_system(source_path("systems/generic_quadratic.sys"));
  // Cubic b300 enters the inequality; add it to the quadratic family.
  const std::string text = testsupport::generic_system_text(3);
  const SystemModel s = parse_system(text).substitute({{"b200", Coef(0)}});
  const auto& ps = s.params;
  const Andreev2Condition c = andreev2_condition(s);
  CHECK(c.lhs == C("b101*c200/lambda", ps));
  CHECK(c.rhs == C("-(2*a200 - b110)^2/8 - b300", ps));
  CHECK(c.beta_flag == C("2*a200 + b110", ps));
  // Delta of the restricted system equals 8 (lhs - rhs).
  const AndreevData d = data_of(s, 3);
  REQUIRE(d.n == 2);
  CHECK(d.Delta == c.difference() * Coef(8));

  const SystemModel k = load_system(source_path("systems/kukles.sys"));
  const Andreev2Condition kc = andreev2_condition(k);
  CHECK(kc.difference() == C("b101", k.params));
  CHECK(kc.beta_flag.is_zero());
  (void)g;
}

TEST_CASE("randomized numeric quadratic systems: both routes agree") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> d(-3, 3);
  const SystemModel s = parse_system(testsupport::generic_system_text(3));
  int monodromic = 0;
  for (int trial = 0; trial < 25; ++trial) {
    std::map<std::string, Coef> vals;
    for (const auto& p : s.params) vals[p] = Coef::rational(d(rng), 1 + rng() % 2);
    int lam = d(rng);
    vals["lambda"] = Coef(lam == 0 ? 1 : lam);
    vals["b200"] = Coef(0);
    const SystemModel t = s.substitute(vals);
    const Andreev2Condition c = andreev2_condition(t);
    const AndreevData data = data_of(t, 4);
    const MonodromyVerdict v = classify_monodromy(data);
    const bool mono = c.difference().rational_value() < 0;
    CHECK((v.status == MonodromyVerdict::Status::Monodromic) == mono);
    if (mono) {
      ++monodromic;
      CHECK(v.n == 2);
      CHECK((v.condition == MonodromyVerdict::Condition::II) == !c.beta_flag.is_zero());
      CHECK(data.a_tilde.rational_value() < 0);
    }
  }
  CHECK(monodromic > 3);
}

TEST_CASE("beta shortcut on the quadratic example") {
  PlanarSystem pl;
  pl.order = 8;
  pl.X2 = Jet2(Poly2::monomial({2, 0}), 8);
  pl.Y2 = Jet2(Poly2::monomial({3, 0}, -1), 8);
  const AndreevData d = andreev_data(pl);
  CHECK(d.b_tilde == Coef(2));
  CHECK(beta_shortcut(d) == Coef(2));
  const MonodromyVerdict v = classify_monodromy(d);
  CHECK(v.status == MonodromyVerdict::Status::Monodromic);
  CHECK(v.condition == MonodromyVerdict::Condition::II);

  // n = 2, a = -1, b = 1: x' = y + x^2/2 gives Phi = x.
  pl.X2 = Jet2(Poly2::monomial({2, 0}, Coef::rational(1, 2)), 8);
  const AndreevData e = andreev_data(pl);
  CHECK(e.b_tilde == Coef(1));
  CHECK(beta_shortcut(e) == Coef(1));

  pl.X2 = Jet2(Poly2(), 8);
  CHECK_THROWS_AS(beta_shortcut(andreev_data(pl)), PreconditionError);
}

TEST_CASE("flat f is inconclusive") {
  PlanarSystem pl;
  pl.order = 6;
  pl.X2 = Jet2(Poly2(), 6);
  pl.Y2 = Jet2(Poly2::monomial({1, 1}), 6);
  const MonodromyVerdict v = classify_monodromy(andreev_data(pl));
  CHECK(v.status == MonodromyVerdict::Status::Inconclusive);
}
