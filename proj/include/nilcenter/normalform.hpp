#pragma once

#include <array>
#include <optional>

#include "nilcenter/model.hpp"

namespace nilcenter {

/// x' = y + x P1(x), y' = Q2(x) + y P1(x), z' = -lambda z + z R1(x)
/// through degree m, with the accumulated near-identity change u = Phi(w).
struct NormalFormResult {
  Jet1 P1, Q2, R1;
  std::array<Jet3, 3> transform;  // Phi(w) = w + (terms of degree >= 2)
  int order = 0;
  Coef lambda;
  SideConditionSet side_conditions;

  /// The normal-form field as a (truncated) system.
  SystemModel system() const;
  bool transform_is_identity() const;
};

/// Degree-by-degree reduction. At each degree k the homological operator
///   phi -> (T phi1 - phi2, T phi2, L phi3)
/// is certified to have an image complementary to the resonant span of
///   (x^k, y x^{k-1}, 0), (0, x^k, 0), (0, 0, x^{k-1} z).
NormalFormResult normal_form(const SystemModel& s, int m);

/// D Phi(w) g(w) - F(Phi(w)) through degree m, F the original field and
/// g the normal form.
std::array<Poly3, 3> conjugacy_residual(const SystemModel& s, const NormalFormResult& nf);

struct IntegrabilityPattern {
  bool p1_zero_to_m = false;
  std::optional<int> m_index;  // first nonzero index of P1
  int n = 0;
  bool matches_2sn_minus_1 = false;
};

/// Formal integrability needs P1 = 0 or a first index m = 2 s n - 1.
IntegrabilityPattern integrability_pattern(const NormalFormResult& nf, int n);

}  // namespace nilcenter
