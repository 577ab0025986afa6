#include "nilcenter/cmanifold.hpp"

#include "nilcenter/series.hpp"

namespace nilcenter {

namespace {

const Jet2 kX = Jet2::exact(Poly2::variable(0));
const Jet2 kY = Jet2::exact(Poly2::variable(1));

Poly2 on_manifold(const Poly3& p, const Poly2& h, int m) {
  return compose<3, 2>(Jet3(p, m), {kX, kY, Jet2(h, m)}).poly();
}

}  // namespace

Poly2 invariance_defect(const SystemModel& s, const Poly2& h, int m) {
  s.check_order(m);
  const Poly2 Ph = on_manifold(s.P, h, m), Qh = on_manifold(s.Q, h, m), Rh = on_manifold(s.R, h, m);
  Poly2 e = Poly2::multiply(h.partial(0), Poly2::variable(1) + Ph, m);
  e += Poly2::multiply(h.partial(1), Qh, m);
  e += h.truncated(m).scaled(s.lambda);
  e -= Rh;
  return e;
}

CenterManifoldJet cm_jet(const SystemModel& s, int m) {
  if (m < 1) throw PreconditionError("center manifold order must be at least 1");
  s.check_order(m);
  CenterManifoldJet out;
  out.order = m;
  if (!s.lambda.is_rational()) out.side_conditions.add(s.lambda, Relation::NonZero, "cm_jet");
  Poly2 h;
  for (int k = 2; k <= m; ++k) {
    const Poly2 g = invariance_defect(s, h, k).homogeneous_part(k);
    // (j+1) h_{j+1,i-1} + lambda h_{j,i} = -g_{j,i}, swept from i = 0.
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      Coef v = -g.coeff({j, i});
      if (i >= 1) v -= h.coeff({j + 1, i - 1}) * Coef(j + 1);
      h.set_term({j, i}, v / s.lambda);
    }
  }
  out.h = Jet2(h, m);
  return out;
}

CenterManifoldJet exact_manifold(const Poly2& h) {
  for (const auto& [e, c] : h.terms())
    if (degree_of(e) < 2) throw PreconditionError("a center manifold must have zero constant and linear part");
  CenterManifoldJet out;
  out.h = Jet2::exact(h);
  out.order = kExact;
  out.provenance = CenterManifoldJet::Provenance::UserExact;
  return out;
}

PlanarSystem restrict_to(const SystemModel& s, const CenterManifoldJet& h, int order) {
  if (!h.h.is_exact() && order > h.order)
    throw OrderError("restriction order " + std::to_string(order) + " exceeds the manifold jet order " +
                     std::to_string(h.order));
  s.check_order(order);
  const Poly2 hp = h.h.poly().truncated(order);
  PlanarSystem pl;
  pl.order = order;
  pl.X2 = Jet2(on_manifold(s.P, hp, order), order);
  pl.Y2 = Jet2(on_manifold(s.Q, hp, order), order);
  return pl;
}

PlanarSystem restrict_to(const SystemModel& s, const CenterManifoldJet& h) { return restrict_to(s, h, h.order); }

PlanarSystem restrict_exact(const SystemModel& s, const Poly2& h) {
  if (!s.exact) throw PreconditionError("exact restriction needs an exact system");
  const std::array<Jet2, 3> sub = {kX, kY, Jet2::exact(h)};
  PlanarSystem pl;
  pl.order = kExact;
  pl.X2 = compose<3, 2>(Jet3::exact(s.P), sub);
  pl.Y2 = compose<3, 2>(Jet3::exact(s.Q), sub);
  return pl;
}

Poly3 lie_derivative(const SystemModel& s, const Poly3& V) {
  const auto f = s.field();
  return V.partial(0) * f[0] + V.partial(1) * f[1] + V.partial(2) * f[2];
}

SurfaceCheck divide_by(const Poly3& f, const Poly3& g) {
  if (g.is_zero()) throw DegenerateInputError("cannot divide by the zero polynomial");
  SurfaceCheck out;
  const auto& [lm, lc] = *g.terms().rbegin();
  Poly3 p = f;
  while (!p.is_zero()) {
    const auto [pm, pc] = *p.terms().rbegin();
    bool divisible = true;
    Poly3::Exp q{};
    for (int i = 0; i < 3; ++i) {
      q[i] = pm[i] - lm[i];
      divisible = divisible && q[i] >= 0;
    }
    if (divisible) {
      const Coef t = pc / lc;
      out.quotient.add_term(q, t);
      p -= g.times_monomial(q, t);
    } else {
      out.remainder.add_term(pm, pc);
      p.set_term(pm, Coef());
    }
  }
  out.invariant = out.remainder.is_zero();
  return out;
}

SurfaceCheck invariant_surface_check(const SystemModel& s, const Poly3& V) {
  if (V.is_zero() || V.degree() < 1) throw DegenerateInputError("invariant surface needs a nonconstant polynomial");
  return divide_by(lie_derivative(s, V), V);
}

std::optional<Poly3> exact_cm_candidate(const SystemModel& s, int m) {
  if (!s.exact) return std::nullopt;
  const CenterManifoldJet h = cm_jet(s, m);
  Poly3 V = Poly3::variable(2);
  for (const auto& [e, c] : h.h.poly().terms()) V.add_term({e[0], e[1], 0}, -c);
  if (invariant_surface_check(s, V).invariant) return V;
  return std::nullopt;
}

std::string Reversibility::label() const {
  if (x_reversible && y_reversible) return "x-reversible, y-reversible";
  if (x_reversible) return "x-reversible";
  if (y_reversible) return "y-reversible";
  return "none";
}

Reversibility reversibility_check(const PlanarSystem& pl) {
  const Poly2 xd = pl.xdot().poly(), yd = pl.ydot().poly();
  auto all_parity = [](const Poly2& p, int var, int parity) {
    for (const auto& [e, c] : p.terms())
      if (e[var] % 2 != parity) return false;
    return true;
  };
  Reversibility r;
  r.x_reversible = all_parity(xd, 0, 0) && all_parity(yd, 0, 1);
  r.y_reversible = all_parity(xd, 1, 1) && all_parity(yd, 1, 0);
  return r;
}

std::optional<HamiltonianResult> hamiltonian_reconstruct(const PlanarSystem& pl) {
  const Poly2 xd = pl.xdot().poly(), yd = pl.ydot().poly();
  const int order = pl.X2.is_exact() && pl.Y2.is_exact() ? kExact : pl.order;
  // The divergence of a jet of order N is known through degree N - 1.
  Poly2 div = xd.partial(0) + yd.partial(1);
  if (order < kExact) div = div.truncated(order - 1);
  if (!div.is_zero()) return std::nullopt;
  Poly2 H;
  for (const auto& [e, c] : xd.terms()) H.add_term({e[0], e[1] + 1}, c / Coef(e[1] + 1));
  for (const auto& [e, c] : yd.terms())
    if (e[1] == 0) H.add_term({e[0] + 1, 0}, -c / Coef(e[0] + 1));
  HamiltonianResult out;
  out.H = Jet2(H, order < kExact ? order + 1 : kExact);
  const Coef cyy = H.coeff({0, 2});
  if (H.coeff({2, 0}).is_zero() && H.coeff({1, 1}).is_zero() && cyy.sign() == 1)
    out.H_normalized = out.H.scaled(cyy.inverse());
  return out;
}

}  // namespace nilcenter
