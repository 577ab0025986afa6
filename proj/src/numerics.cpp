#include "nilcenter/numerics.hpp"

#include <array>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "nilcenter/series.hpp"

namespace nilcenter {

namespace odeint = boost::numeric::odeint;

namespace {

using State2 = std::array<double, 2>;
using State3 = std::array<double, 3>;

constexpr double kIntegratorTol = 1e-12;

template <class State, class System>
void integrate(System sys, State& x, double t0, double t1, double tol) {
  auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_fehlberg78<State>());
  const double dt = t1 >= t0 ? 1e-3 : -1e-3;
  odeint::integrate_adaptive(stepper, sys, x, t0, t1, dt);
}

struct TrigRhs {
  int n;
  void operator()(const State2& s, State2& ds, double) const {
    ds[0] = -s[1];
    ds[1] = std::pow(s[0], 2 * n - 1);
  }
};

struct NumTerm {
  int i, j;
  double c;
};

std::vector<NumTerm> numeric_terms(const Poly2& p) {
  std::vector<NumTerm> out;
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_rational()) throw PreconditionError("numeric evaluation needs numeric coefficients, got " + c.to_string());
    out.push_back({e[0], e[1], c.to_double()});
  }
  return out;
}

double eval(const std::vector<NumTerm>& p, double x, double y) {
  double s = 0;
  for (const auto& t : p) s += t.c * std::pow(x, t.i) * std::pow(y, t.j);
  return s;
}

double eval1(const std::vector<std::pair<int, double>>& p, double x) {
  double s = 0;
  for (const auto& [k, c] : p) s += c * std::pow(x, k);
  return s;
}

}  // namespace

double gen_trig_period(int n) {
  if (n < 1) throw PreconditionError("n must be positive");
  const double dn = n;
  return 2 * std::sqrt(M_PI / dn) * std::tgamma(1 / (2 * dn)) / std::tgamma((dn + 1) / (2 * dn));
}

double gen_trig_even_integral(int n, int p, int q) {
  if (p % 2 || q % 2) throw PreconditionError("closed form needs even p and q");
  const double a = (p + 1) / 2.0, b = (q + 1) / (2.0 * n);
  return 2 / std::sqrt(std::pow(double(n), p + 1)) * std::tgamma(a) * std::tgamma(b) / std::tgamma(a + b);
}

std::pair<double, double> GenTrig::at(double theta) const {
  State2 s = {1, 0};
  if (theta != 0) integrate(TrigRhs{n}, s, 0.0, theta, kIntegratorTol);
  return {s[0], s[1]};
}

double GenTrig::integral(int p, int q) const {
  State3 s = {1, 0, 0};
  const int m = n;
  integrate(
      [m, p, q](const State3& x, State3& dx, double) {
        dx[0] = -x[1];
        dx[1] = std::pow(x[0], 2 * m - 1);
        dx[2] = std::pow(x[1], p) * std::pow(x[0], q);
      },
      s, 0.0, T, kIntegratorTol);
  return s[2];
}

GenTrig gen_trig(int n, double tol) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (tol <= 0) throw PreconditionError("tolerance must be positive");
  GenTrig g;
  g.n = n;
  g.tol = tol;
  g.T = gen_trig_period(n);

  // Identity check on a grid and the first sign change of Cs.
  State2 s = {1, 0};
  const int steps = 400;
  const double h = g.T / steps;
  double theta = 0, bracket = -1;
  State2 at_bracket{};
  for (int k = 1; k <= steps; ++k) {
    const State2 prev = s;
    integrate(TrigRhs{n}, s, theta, theta + h, kIntegratorTol);
    if (bracket < 0 && prev[0] > 0 && s[0] <= 0) {
      bracket = theta;
      at_bracket = prev;
    }
    theta += h;
    g.max_identity_error =
        std::max(g.max_identity_error, std::abs(std::pow(s[0], 2 * n) + n * s[1] * s[1] - 1));
  }
  g.closure = std::abs(s[0] - 1) + std::abs(s[1]);
  if (bracket < 0) throw NumericError("Cs has no zero over the computed period");
  // Newton on Cs(theta) = 0 with Cs' = -Sn.
  double t = bracket;
  State2 u = at_bracket;
  for (int it = 0; it < 8; ++it) {
    const double next = t + u[0] / u[1];
    integrate(TrigRhs{n}, u, t, next, kIntegratorTol);
    t = next;
    if (std::abs(u[0]) < 1e-15) break;
  }
  g.T_return = 4 * t;
  if (g.closure > tol) throw NumericError("generalized trigonometric closure " + std::to_string(g.closure) +
                                          " exceeds tolerance " + std::to_string(tol));
  return g;
}

bool DisplacementSample::decided() const { return std::abs(d) > 10 * err; }

DisplacementResult displacement(const PlanarSystem& pl, int n, const std::vector<double>& rho_grid, double tol) {
  if (n < 1) throw PreconditionError("n must be positive");
  const Jet1 F = implicit_solve(pl.xdot());
  std::vector<std::pair<int, double>> Fn, dFn;
  for (const auto& [e, c] : F.poly().terms()) {
    if (!c.is_rational()) throw PreconditionError("numeric evaluation needs numeric coefficients");
    Fn.emplace_back(e[0], c.to_double());
    if (e[0] > 0) dFn.emplace_back(e[0] - 1, e[0] * c.to_double());
  }
  const auto X = numeric_terms(pl.xdot().poly()), Y = numeric_terms(pl.ydot().poly());

  // v = y - F(x); x = rho Cs, v = rho^n Sn.
  auto rhs = [&](const State3& s, State3& ds, double) {
    const double rho = s[0], C = s[1], S = s[2];
    const double x = rho * C, v = std::pow(rho, n) * S;
    const double y = v + eval1(Fn, x);
    const double xd = eval(X, x, y);
    const double vd = eval(Y, x, y) - eval1(dFn, x) * xd;
    const double rho_dot = (std::pow(x, 2 * n - 1) * xd + v * vd) / std::pow(rho, 2 * n - 1);
    const double theta_dot = (C * vd - n * std::pow(rho, n - 1) * S * xd) / std::pow(rho, n);
    if (std::abs(theta_dot) < 1e-9 * std::pow(rho, n - 1))
      throw NumericError("angular speed vanishes: the point is not monodromic at this radius");
    ds[0] = rho_dot / theta_dot;
    ds[1] = -S;
    ds[2] = std::pow(C, 2 * n - 1);
  };

  DisplacementResult out;
  out.n = n;
  out.T = gen_trig_period(n);
  for (const double rho0 : rho_grid) {
    if (rho0 <= 0) throw PreconditionError("rho0 must be positive");
    auto run = [&](double t) {
      State3 s = {rho0, 1, 0};
      integrate(rhs, s, 0.0, out.T, t);
      return s[0] - rho0;
    };
    DisplacementSample smp;
    smp.rho0 = rho0;
    smp.d = run(tol);
    smp.err = std::abs(smp.d - run(tol * 100));
    out.samples.push_back(smp);
  }

  std::vector<std::pair<double, double>> pts;
  std::optional<int> sign;
  bool consistent = true;
  for (const auto& s : out.samples) {
    if (!s.decided()) continue;
    const int sg = s.d > 0 ? 1 : -1;
    if (sign && *sign != sg) consistent = false;
    sign = sg;
    pts.emplace_back(std::log(s.rho0), std::log(std::abs(s.d)));
  }
  out.below_floor = pts.empty();
  if (consistent) out.sign = sign;
  if (pts.size() >= 2) {
    double mx = 0, my = 0;
    for (const auto& [a, b] : pts) mx += a, my += b;
    mx /= pts.size();
    my /= pts.size();
    double sxy = 0, sxx = 0;
    for (const auto& [a, b] : pts) sxy += (a - mx) * (b - my), sxx += (a - mx) * (a - mx);
    if (sxx > 0) out.exponent = sxy / sxx;
  }
  return out;
}

V1Result v1_check(double mu, int n) {
  if (n < 1) throw PreconditionError("n must be positive");
  PlanarSystem pl;
  pl.order = 2 * n + 1;
  const Coef m = Coef(mpq_class(mu));
  pl.X2 = Jet2(Poly2::monomial({n, 0}, m), pl.order);
  pl.Y2 = Jet2(Poly2::monomial({2 * n - 1, 0}, Coef(-n)) + Poly2::monomial({n - 1, 1}, m * Coef(n)), pl.order);

  V1Result r;
  const double T = gen_trig_period(n);
  State3 s = {1, 0, 0};
  integrate(
      [n](const State3& x, State3& dx, double) {
        dx[0] = -x[1];
        dx[1] = std::pow(x[0], 2 * n - 1);
        dx[2] = std::pow(x[0], n - 1) / (n * (1 - (n - 1) * x[1] * x[1]));
      },
      s, 0.0, T, kIntegratorTol);
  r.formula = std::exp(-mu * s[2]);

  // Richardson extrapolation of d(rho0)/rho0 at rho0 -> 0.
  const std::vector<double> grid = {1e-3, 2e-3};
  const DisplacementResult d = displacement(pl, n, grid);
  const double q1 = d.samples[0].d / grid[0], q2 = d.samples[1].d / grid[1];
  r.estimate = 1 + (2 * q1 - q2);
  return r;
}

}  // namespace nilcenter
