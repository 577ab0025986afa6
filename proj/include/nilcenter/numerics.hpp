#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nilcenter/model.hpp"

namespace nilcenter {

/// T = 2 sqrt(pi/n) Gamma(1/(2n)) / Gamma((n+1)/(2n)).
double gen_trig_period(int n);

/// Closed form of the integral of Sn^p Cs^q over a period, p and q even.
double gen_trig_even_integral(int n, int p, int q);

/// Cs, Sn: u' = -v, v' = u^{2n-1}, u(0) = 1, v(0) = 0.
struct GenTrig {
  int n = 1;
  double T = 0;         // from the Gamma expression
  double T_return = 0;  // 4 x (first zero of Cs)
  double tol = 0;
  double closure = 0;   // |Cs(T) - 1| + |Sn(T)|
  double max_identity_error = 0;  // max |Cs^{2n} + n Sn^2 - 1| on a grid

  /// (Cs, Sn) at theta (any sign).
  std::pair<double, double> at(double theta) const;
  /// Integral of Sn^p Cs^q over [0, T] by quadrature along the flow.
  double integral(int p, int q) const;
};

/// Throws NumericError when the closure misses tol.
GenTrig gen_trig(int n, double tol = 1e-10);

struct DisplacementSample {
  double rho0 = 0;
  double d = 0;
  double err = 0;  // difference between two integrator tolerances
  bool decided() const;  // |d| > 10 err
};

struct DisplacementResult {
  int n = 0;
  double T = 0;
  std::vector<DisplacementSample> samples;
  std::optional<double> exponent;  // log-log slope over decided samples
  std::optional<int> sign;         // common sign of decided samples
  bool below_floor = false;        // no sample decided
};

/// d(rho0) = rho(T) - rho0 for the generalized polar equation of the planar
/// system after y -> y - F(x). Coefficients must be numeric.
DisplacementResult displacement(const PlanarSystem& pl, int n, const std::vector<double>& rho_grid,
                                 double tol = 1e-12);

struct V1Result {
  double estimate = 0;  // 1 + lim d(rho0)/rho0
  double formula = 0;   // exp(-mu * integral of Cs^{n-1} / (n (1 - (n-1) Sn^2)))
};

/// First multiplier of x' = y + mu x^n, y' = -n x^{2n-1} + n mu x^{n-1} y.
V1Result v1_check(double mu, int n);

}  // namespace nilcenter
