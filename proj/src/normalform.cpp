#include "nilcenter/normalform.hpp"

#include <algorithm>

#include "nilcenter/linops.hpp"
#include "nilcenter/series.hpp"

namespace nilcenter {

namespace {

using Field = std::array<Poly3, 3>;

Poly3 tpart(const Poly3& p, int k, const Coef& lambda) { return HomogOperator{OpKind::T, k, lambda}.apply(p); }

// Rank checks of the degree-k operator on triples and of its image plus the
// resonant span.
void certify(int k, const Coef& lambda) {
  const auto basis = monomial_basis<3>(k);
  const std::size_t nb = basis.size();
  auto row_of = [&](int comp, const Exponent<3>& e) {
    for (std::size_t i = 0; i < nb; ++i)
      if (basis[i] == e) return comp * nb + i;
    throw InternalError("monomial outside the degree basis");
  };
  std::vector<std::vector<Coef>> m(3 * nb);
  auto push_column = [&](const Field& img) {
    std::vector<Coef> col(3 * nb);
    for (int c = 0; c < 3; ++c)
      for (const auto& [e, v] : img[c].terms()) col[row_of(c, e)] = v;
    for (std::size_t r = 0; r < 3 * nb; ++r) m[r].push_back(col[r]);
  };
  for (int c = 0; c < 3; ++c)
    for (const auto& e : basis) {
      Field phi;
      phi[c] = Poly3::monomial(e);
      push_column({tpart(phi[0], k, lambda) - phi[1], tpart(phi[1], k, lambda),
                   HomogOperator{OpKind::L, k, lambda}.apply(phi[2])});
    }
  const int r = rank(m);
  push_column({Poly3::monomial({k, 0, 0}), Poly3::monomial({k - 1, 1, 0}), Poly3()});
  push_column({Poly3(), Poly3::monomial({k, 0, 0}), Poly3()});
  push_column({Poly3(), Poly3(), Poly3::monomial({k - 1, 0, 1})});
  if (r != int(3 * nb) - 3 || rank(m) != int(3 * nb))
    throw InternalError("normal form split failed at degree " + std::to_string(k));
}

Field jacobian_times(const Field& phi, const Field& g, int m) {
  Field out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += Poly3::multiply(phi[i].partial(j), g[j], m);
  return out;
}

Field compose_field(const Field& F, const Field& sub, int m) {
  const std::array<Jet3, 3> subs = {Jet3(sub[0], m), Jet3(sub[1], m), Jet3(sub[2], m)};
  Field out;
  for (int i = 0; i < 3; ++i) out[i] = compose<3, 3>(Jet3(F[i].truncated(m), m), subs).poly();
  return out;
}

Field add(const Field& a, const Field& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Field identity_map() { return {Poly3::variable(0), Poly3::variable(1), Poly3::variable(2)}; }

}  // namespace

NormalFormResult normal_form(const SystemModel& s, int m) {
  if (m < 2) throw PreconditionError("normal form order must be at least 2");
  s.check_order(m);
  const Coef& lam = s.lambda;
  Field F = s.field();
  for (auto& c : F) c = c.truncated(m);
  const Field original = F;
  Field Phi = identity_map();

  NormalFormResult out;
  out.order = m;
  out.lambda = lam;
  if (!lam.is_rational()) out.side_conditions.add(lam, Relation::NonZero, "normal_form");
  Poly1 P1, Q2, R1;

  for (int k = 2; k <= m; ++k) {
    certify(k, lam);
    const Poly3 f1 = F[0].homogeneous_part(k), f2 = F[1].homogeneous_part(k), f3 = F[2].homogeneous_part(k);

    const SolveResult third = solve_L(f3, k, lam);
    const Poly3 phi3 = -third.p;
    const Poly3 sum = f2 + tpart(f1, k, lam);
    const SolveResult second = solve_T(sum, k, lam);
    const Coef p = -Coef(k) * second.p.coeff({k, 0, 0}) / Coef(k + 1);
    const SolveResult first =
        solve_T(second.p + Poly3::monomial({k, 0, 0}, p * Coef(k + 1) / Coef(k)), k, lam);
    if (!first.residue.is_zero()) throw InternalError("normal form: unsolvable first component");
    const Poly3 phi1 = first.p;
    const Poly3 phi2 = Poly3::monomial({k, 0, 0}, p) - f1 + tpart(phi1, k, lam);

    P1.add_term({k - 1}, p);
    Q2.add_term({k}, second.residue);
    R1.add_term({k - 1}, third.residue);

    const Field phi = {phi1, phi2, phi3};
    if (phi[0].is_zero() && phi[1].is_zero() && phi[2].is_zero()) continue;
    // (I + D phi) g = F(w + phi), solved by fixed-point iteration in degree.
    const Field rhs = compose_field(F, add(identity_map(), phi), m);
    Field g = rhs;
    for (int it = 0; it < m; ++it) {
      const Field dg = jacobian_times(phi, g, m);
      const Field next = {rhs[0] - dg[0], rhs[1] - dg[1], rhs[2] - dg[2]};
      if (next == g) break;
      g = next;
    }
    F = g;
    Phi = compose_field(Phi, add(identity_map(), phi), m);

    const Poly3 expected1 = Poly3::monomial({k, 0, 0}, p);
    const Poly3 expected2 = Poly3::monomial({k, 0, 0}, second.residue) + Poly3::monomial({k - 1, 1, 0}, p);
    const Poly3 expected3 = Poly3::monomial({k - 1, 0, 1}, third.residue);
    if (F[0].homogeneous_part(k) != expected1 || F[1].homogeneous_part(k) != expected2 ||
        F[2].homogeneous_part(k) != expected3)
      throw InternalError("normal form: degree " + std::to_string(k) + " not reduced");
  }
  (void)original;
  out.P1 = Jet1(P1, m - 1);
  out.Q2 = Jet1(Q2, m);
  out.R1 = Jet1(R1, m - 1);
  for (int i = 0; i < 3; ++i) out.transform[i] = Jet3(Phi[i], m);
  return out;
}

SystemModel NormalFormResult::system() const {
  const Poly3 x = Poly3::variable(0), y = Poly3::variable(1), z = Poly3::variable(2);
  auto lift = [](const Poly1& p) {
    Poly3 o;
    for (const auto& [e, c] : p.terms()) o.add_term({e[0], 0, 0}, c);
    return o;
  };
  const Poly3 p1 = lift(P1.poly()), q2 = lift(Q2.poly()), r1 = lift(R1.poly());
  std::vector<std::string> params;
  for (const auto& name : lambda.symbols()) params.push_back(name);
  for (const auto* part : {&p1, &q2, &r1})
    for (const auto& name : part->symbols())
      if (std::find(params.begin(), params.end(), name) == params.end()) params.push_back(name);
  std::sort(params.begin(), params.end());
  return make_system({y + x * p1, q2 + y * p1, z * r1 - z.scaled(lambda)}, params, order, false);
}

bool NormalFormResult::transform_is_identity() const {
  for (int i = 0; i < 3; ++i)
    if (transform[i].poly() != Poly3::variable(i)) return false;
  return true;
}

std::array<Poly3, 3> conjugacy_residual(const SystemModel& s, const NormalFormResult& nf) {
  const int m = nf.order;
  Field F = s.field();
  const Field Phi = {nf.transform[0].poly(), nf.transform[1].poly(), nf.transform[2].poly()};
  const SystemModel ns = nf.system();
  const Field g = ns.field();
  const Field lhs = jacobian_times(Phi, g, m);
  const Field rhs = compose_field(F, Phi, m);
  return {lhs[0] - rhs[0], lhs[1] - rhs[1], lhs[2] - rhs[2]};
}

IntegrabilityPattern integrability_pattern(const NormalFormResult& nf, int n) {
  if (n < 1) throw PreconditionError("Andreev number must be positive");
  IntegrabilityPattern ip;
  ip.n = n;
  const Poly1& p = nf.P1.poly();
  ip.p1_zero_to_m = p.is_zero();
  if (!p.is_zero()) {
    ip.m_index = p.low_degree();
    ip.matches_2sn_minus_1 = (*ip.m_index + 1) % (2 * n) == 0;
  }
  return ip;
}

}  // namespace nilcenter
