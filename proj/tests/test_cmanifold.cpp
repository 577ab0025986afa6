#include <doctest.h>

#include "nilcenter/cmanifold.hpp"
#include "nilcenter/parser.hpp"
#include "test_support.hpp"

using namespace nilcenter;
using testsupport::C;
using testsupport::source_path;

namespace {

Poly2 P2(const std::string& s, const std::vector<std::string>& params = {}) {
  const Poly3 p = parse_polynomial(s, params);
  Poly2 out;
  for (const auto& [e, c] : p.terms()) {
    REQUIRE(e[2] == 0);
    out.add_term({e[0], e[1]}, c);
  }
  return out;
}

PlanarSystem planar(const std::string& xdot_minus_y, const std::string& ydot, int order,
                    const std::vector<std::string>& params = {}) {
  PlanarSystem pl;
  pl.order = order;
  pl.X2 = Jet2(P2(xdot_minus_y, params), order);
  pl.Y2 = Jet2(P2(ydot, params), order);
  return pl;
}

}  // namespace

TEST_CASE("generic quadratic j^2 h") {
  const SystemModel s = load_system(source_path("systems/generic_quadratic.sys"));
  const auto& ps = s.params;
  const CenterManifoldJet h = cm_jet(s, 2);
  CHECK(h.h.poly().coeff({2, 0}) == C("c200/lambda", ps));
  CHECK(h.h.poly().coeff({1, 1}) == C("(lambda*c110 - 2*c200)/lambda^2", ps));
  CHECK(h.h.poly().coeff({0, 2}) == C("(2*c200 - lambda*c110 + c020*lambda^2)/lambda^3", ps));
  CHECK(h.h.poly().size() == 3);
  CHECK_FALSE(h.side_conditions.empty());
}

TEST_CASE("trivial system has h = 0") {
  const SystemModel s = load_system(source_path("systems/trivial.sys"));
  for (int m = 2; m <= 10; ++m) CHECK(cm_jet(s, m).h.poly().is_zero());
  const PlanarSystem pl = restrict_to(s, cm_jet(s, 6));
  CHECK(pl.X2.poly().is_zero());
  CHECK(pl.Y2.poly() == P2("-x^3"));
}

TEST_CASE("Kukles center branch: h = x^2 at every order") {
  const SystemModel s = load_system(source_path("systems/kukles_center.sys"));
  for (int m = 2; m <= 8; ++m) CHECK(cm_jet(s, m).h.poly() == P2("x^2"));
  const PlanarSystem pl = restrict_to(s, cm_jet(s, 6));
  CHECK(pl.X2.poly().is_zero());
  CHECK(pl.Y2.poly() == P2("b101*x^3 + b020*y^2 + b002*x^4", s.params));
  CHECK(reversibility_check(pl).y_reversible);
  CHECK_FALSE(reversibility_check(pl).x_reversible);
}

TEST_CASE("defect vanishes and jets are stable across orders") {
  for (const char* f : {"systems/generic_quadratic.sys", "systems/lorenz_general.sys", "systems/kukles.sys",
                        "systems/dynamo_general.sys"}) {
    const SystemModel s = load_system(source_path(f));
    const int m = std::string(f).find("generic") != std::string::npos ? 4 : 6;
    const CenterManifoldJet h = cm_jet(s, m);
    CHECK(invariance_defect(s, h.h.poly(), m).is_zero());
    CHECK(cm_jet(s, m + 1).h.poly().truncated(m) == h.h.poly());
  }
}

TEST_CASE("Lorenz d = -2a: invariant surface, restriction, Hamiltonian") {
  const SystemModel s = load_system(source_path("systems/lorenz.sys"));
  const auto& ps = s.params;
  const Poly3 V = parse_polynomial("x^2 - 2*x*y/a + y^2/a^2 - 2*a*z", ps);
  const SurfaceCheck chk = invariant_surface_check(s, V);
  CHECK(chk.invariant);
  CHECK(lie_derivative(s, V) == chk.quotient * V);

  const auto V2 = exact_cm_candidate(s, 4);
  REQUIRE(V2);
  // z - h equals -V/(2a).
  CHECK(*V2 == V.scaled(C("-1/(2*a)", ps)));

  const Poly2 hp = P2("(x - y/a)^2/(2*a)", ps);
  const PlanarSystem pl = restrict_to(s, exact_manifold(hp), 8);
  CHECK(pl.Y2.poly() == P2("-a*x*(x - y/a)^2/(2*a) + y*(x - y/a)^2/(2*a)", ps));
  CHECK(pl.X2.poly() == P2("-x*(x - y/a)^2/(2*a) + y*(x - y/a)^2/(2*a^2)", ps));

  const auto ham = hamiltonian_reconstruct(pl);
  REQUIRE(ham);
  REQUIRE(ham->H_normalized);
  CHECK(ham->H_normalized->poly() ==
        P2("y^2 + x^4/4 - x^3*y/a + 3*x^2*y^2/(2*a^2) - x*y^3/a^3 + y^4/(4*a^4)", ps));
  CHECK(ham->H.poly().partial(1) == pl.xdot().poly());
  CHECK(ham->H.poly().partial(0) == -pl.ydot().poly());
}

TEST_CASE("invariant surfaces on the simple systems") {
  const SystemModel kc = load_system(source_path("systems/kukles_center.sys"));
  CHECK(invariant_surface_check(kc, parse_polynomial("z - x^2", {})).invariant);
  const SystemModel t = load_system(source_path("systems/trivial.sys"));
  CHECK(invariant_surface_check(t, Poly3::variable(2)).invariant);
  REQUIRE(exact_cm_candidate(t, 4));
  CHECK(*exact_cm_candidate(t, 4) == Poly3::variable(2));
  CHECK_THROWS_AS(invariant_surface_check(t, Poly3(Coef(3))), DegenerateInputError);

  // c020 != 0 breaks the exact manifold.
  const SystemModel k = load_system(source_path("systems/kukles.sys")).substitute({{"b011", Coef(0)}});
  CHECK_FALSE(exact_cm_candidate(k, 4));
  const Poly2 h = cm_jet(k, 4).h.poly();
  Poly3 V = Poly3::variable(2);
  for (const auto& [e, c] : h.terms()) V.add_term({e[0], e[1], 0}, -c);
  const SurfaceCheck chk = invariant_surface_check(k, V);
  CHECK_FALSE(chk.remainder.is_zero());
  CHECK(lie_derivative(k, V) == chk.quotient * V + chk.remainder);
}

TEST_CASE("reversibility") {
  const Reversibility both = reversibility_check(planar("0", "-x^3", 8));
  CHECK(both.x_reversible);
  CHECK(both.y_reversible);
  // x' = y + x^2 is even in x and y' = -x^3 odd: reversible under (x, t) -> (-x, -t).
  const Reversibility r52 = reversibility_check(planar("x^2", "-x^3", 8));
  CHECK(r52.x_reversible);
  CHECK_FALSE(r52.y_reversible);
  CHECK(reversibility_check(planar("x^2", "-x^3 + y^2", 8)).label() == "none");
}

TEST_CASE("Hamiltonian reconstruction") {
  const auto h = hamiltonian_reconstruct(planar("0", "-x^3", 8));
  REQUIRE(h);
  CHECK(h->H.poly() == P2("y^2/2 + x^4/4"));
  CHECK(h->H_normalized->poly() == P2("y^2 + x^4/2"));
  CHECK_FALSE(hamiltonian_reconstruct(planar("0", "y^2", 8)));
}
