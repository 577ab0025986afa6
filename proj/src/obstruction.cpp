#include "nilcenter/obstruction.hpp"

#include "nilcenter/linops.hpp"

namespace nilcenter {

namespace {

// One linear piece of H: the base series (from y^2) or the response to a
// free kernel constant c_k y^k. G caches P H_x + Q H_y + R H_z through N.
struct Track {
  Poly3 H, G;
  std::map<int, Coef> omega;
};

struct Nonlinear {
  Poly3 P, Q, R;
  int N;
};

void add_part(Track& t, const Poly3& part, const Nonlinear& nl) {
  t.H += part;
  t.G += Poly3::multiply(part.partial(0), nl.P, nl.N);
  t.G += Poly3::multiply(part.partial(1), nl.Q, nl.N);
  t.G += Poly3::multiply(part.partial(2), nl.R, nl.N);
}

// t -= c * u
void subtract_multiple(Track& t, const Coef& c, const Track& u) {
  t.H -= u.H.scaled(c);
  t.G -= u.G.scaled(c);
  for (const auto& [k, w] : u.omega) {
    Coef& slot = t.omega[k];
    slot -= c * w;
  }
}

Poly3 lie_truncated(const SystemModel& s, const Poly3& H, int N) {
  const Poly3 x0 = Poly3::variable(1) + s.P_jet(N).poly();
  const Poly3 x2 = s.R_jet(N).poly() - Poly3::variable(2).scaled(s.lambda);
  Poly3 out = Poly3::multiply(H.partial(0), x0, N);
  out += Poly3::multiply(H.partial(1), s.Q_jet(N).poly(), N);
  out += Poly3::multiply(H.partial(2), x2, N);
  return out;
}

}  // namespace

ObstructionSeries omega_series(const SystemModel& s, int N) {
  if (N < 4) throw PreconditionError("omega series needs order N >= 4");
  s.check_order(N);
  const Nonlinear nl{s.P_jet(N).poly(), s.Q_jet(N).poly(), s.R_jet(N).poly(), N};

  ObstructionSeries out;
  out.N = N;
  Track base;
  add_part(base, Poly3::monomial({0, 2, 0}), nl);
  std::map<int, Track> free;  // keyed by the kernel degree k of c_k y^k

  for (int n = 3; n <= N; ++n) {
    auto step = [&](Track& t) {
      const SolveResult r = solve_T(t.G.homogeneous_part(n), n, s.lambda);
      add_part(t, r.p, nl);
      t.omega[n] = r.residue;
    };
    step(base);
    for (auto& [k, t] : free) step(t);

    if (n % 2 == 1) {
      for (auto it = free.begin(); it != free.end(); ++it) {
        const Coef pivot = it->second.omega[n];
        if (pivot.is_zero()) continue;
        if (!pivot.is_rational()) out.side_conditions.add(pivot, Relation::NonZero, "omega_series");
        const Track u = it->second;
        subtract_multiple(base, base.omega[n] / pivot, u);
        for (auto& [k, t] : free)
          if (k != it->first) subtract_multiple(t, t.omega[n] / pivot, u);
        out.eliminations.emplace_back(it->first, n);
        free.erase(it);
        break;
      }
    }
    if (n < N) {
      Track t;
      add_part(t, Poly3::monomial({0, n, 0}), nl);
      free.emplace(n, std::move(t));
    }
  }

  const Poly3 H = base.H.truncated(N);
  Poly3 residual = lie_truncated(s, H, N);
  for (const auto& [n, w] : base.omega) residual.add_term({n, 0, 0}, -w);
  if (!residual.is_zero() || !base.omega[3].is_zero())
    throw InternalError("omega series failed its defining identity: " + residual.to_string());

  out.H = Jet3(H, N);
  for (int n = 4; n <= N; ++n) {
    const Coef w = base.omega[n];
    out.omegas[n] = w;
    if (!out.first_nonzero && !w.is_zero()) out.first_nonzero = std::make_pair(n, w);
  }
  if (!s.lambda.is_rational()) out.side_conditions.add(s.lambda, Relation::NonZero, "omega_series");
  return out;
}

Jet3 check_first_integral(const SystemModel& s, const Jet3& H, int N) {
  if (H.poly().is_zero() || H.poly().degree() < 1)
    throw PreconditionError("a first integral candidate must be nonconstant");
  if (!H.is_exact() && H.order() < N)
    throw OrderError("candidate is known through degree " + std::to_string(H.order()) + " only");
  s.check_order(N);
  return Jet3(lie_truncated(s, H.poly().truncated(N), N), N);
}

std::string CenterVerdict::status_label() const {
  switch (status) {
    case Status::NotACenter:
      return "not-a-center";
    case Status::NotFormallyIntegrable:
      return "not-formally-integrable";
    case Status::Focus:
      return "focus";
    case Status::CenterConfirmed:
      return "center-confirmed";
    case Status::Undecided:
      return "undecided";
  }
  return "undecided";
}

std::string CenterVerdict::summary() const {
  std::string s = status_label();
  switch (status) {
    case Status::NotACenter:
      s += ": first nonzero omega_" + std::to_string(*index) + " = " + value.to_string() + ", even index";
      break;
    case Status::NotFormallyIntegrable:
      s += ": first nonzero omega_" + std::to_string(*index) + " = " + value.to_string() +
           ", odd index (a center is still possible)";
      break;
    case Status::Focus:
      s += ": beta = n - 1 with odd Andreev number";
      break;
    case Status::CenterConfirmed:
      s += ": " + certificate;
      break;
    case Status::Undecided:
      s += ": all omega vanish through order " + std::to_string(N);
      break;
  }
  return s + " (" + citation + ")";
}

CenterVerdict center_verdict(const SystemModel& s, const AndreevData& d, const MonodromyVerdict& mono,
                             const ObstructionSeries& o, const SignContext& ctx) {
  if (mono.status != MonodromyVerdict::Status::Monodromic)
    throw PreconditionError("center verdict requires a monodromic singular point");
  CenterVerdict v;
  v.N = o.N;
  v.side_conditions.merge(mono.side_conditions);
  v.side_conditions.merge(o.side_conditions);

  if (mono.condition == MonodromyVerdict::Condition::II && mono.n && *mono.n % 2 == 1) {
    v.status = CenterVerdict::Status::Focus;
    v.citation = "odd Andreev number focus theorem";
    return v;
  }
  if (o.first_nonzero) {
    const auto& [k, w] = *o.first_nonzero;
    v.index = k;
    v.value = w;
    if (!w.is_rational() && !ctx.known_nonzero(w)) v.side_conditions.add(w, Relation::NonZero, "center_verdict");
    if (k % 2 == 0) {
      v.status = CenterVerdict::Status::NotACenter;
      v.citation = "even-index obstruction theorem";
    } else {
      v.status = CenterVerdict::Status::NotFormallyIntegrable;
      v.citation = "formal integrability obstruction theorem";
    }
    return v;
  }
  (void)d;

  if (s.exact) {
    if (const auto V = exact_cm_candidate(s, o.N)) {
      Poly2 h;
      for (const auto& [e, c] : V->terms())
        if (e[2] == 0) h.add_term({e[0], e[1]}, -c);
      const PlanarSystem pl = restrict_exact(s, h);
      const std::string surface = "exact invariant manifold " + V->to_string() + " = 0";
      const Reversibility rev = reversibility_check(pl);
      if (rev.x_reversible || rev.y_reversible) {
        v.status = CenterVerdict::Status::CenterConfirmed;
        v.certificate = surface + ", restriction " + rev.label();
        v.citation = "reversible monodromic singular point is a center";
        return v;
      }
      const auto ham = hamiltonian_reconstruct(pl);
      if (ham && ham->H_normalized) {
        v.status = CenterVerdict::Status::CenterConfirmed;
        v.certificate = surface + ", Hamiltonian restriction H = " + ham->H_normalized->poly().to_string();
        v.citation = "Hamiltonian monodromic singular point is a center";
        return v;
      }
    }
  }
  v.status = CenterVerdict::Status::Undecided;
  v.citation = "obstruction series to the computed order";
  return v;
}

}  // namespace nilcenter
