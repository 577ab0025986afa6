#pragma once

#include <optional>

#include "nilcenter/model.hpp"

namespace nilcenter {

struct CenterManifoldJet {
  enum class Provenance { Computed, UserExact };
  Jet2 h;  // zero constant and linear part
  int order = 0;
  Provenance provenance = Provenance::Computed;
  SideConditionSet side_conditions;
};

/// j^m h from the invariance equation
///   h_x (y + P) + h_y Q + lambda h - R = 0   (z = h),
/// solved degree by degree: the degree-k part satisfies
/// y d(h_k)/dx + lambda h_k = -G_k with G_k fixed by lower degrees.
CenterManifoldJet cm_jet(const SystemModel& s, int m);

/// An exact polynomial manifold z = h supplied by the caller.
CenterManifoldJet exact_manifold(const Poly2& h);

/// Left side of the invariance equation through degree m.
Poly2 invariance_defect(const SystemModel& s, const Poly2& h, int m);

/// x' = y + P(x,y,h), y' = Q(x,y,h), as jets of the given order.
PlanarSystem restrict_to(const SystemModel& s, const CenterManifoldJet& h, int order);
PlanarSystem restrict_to(const SystemModel& s, const CenterManifoldJet& h);
/// Exact polynomial restriction to z = h of an exact system.
PlanarSystem restrict_exact(const SystemModel& s, const Poly2& h);

/// Lie derivative of V along the full polynomial field.
Poly3 lie_derivative(const SystemModel& s, const Poly3& V);

struct SurfaceCheck {
  bool invariant = false;
  Poly3 quotient;   // XV = quotient * V + remainder
  Poly3 remainder;  // witness when not invariant
};

/// Reduces XV by the single divisor V (grlex, x > y > z). A principal ideal
/// is generated by a Groebner basis of one element, so the surface V = 0 is
/// invariant iff the remainder vanishes.
SurfaceCheck invariant_surface_check(const SystemModel& s, const Poly3& V);

/// Multivariate division of f by a single divisor g under grlex.
SurfaceCheck divide_by(const Poly3& f, const Poly3& g);

/// If z - j^m h(x,y) is an invariant surface of an exact system, returns it.
std::optional<Poly3> exact_cm_candidate(const SystemModel& s, int m);

struct Reversibility {
  bool x_reversible = false;  // (x, t) -> (-x, -t)
  bool y_reversible = false;  // (y, t) -> (-y, -t)
  std::string label() const;
};

Reversibility reversibility_check(const PlanarSystem& pl);

struct HamiltonianResult {
  Jet2 H;                           // H_y = x', H_x = -y', H(0,0) = 0
  std::optional<Jet2> H_normalized;  // H / c when j^2 H = c y^2 with c > 0
};

/// Returns a Hamiltonian when the divergence vanishes at jet level.
std::optional<HamiltonianResult> hamiltonian_reconstruct(const PlanarSystem& pl);

}  // namespace nilcenter
