#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcenter/cmanifold.hpp"
#include "nilcenter/monodromy.hpp"

namespace nilcenter {

/// H with j^2 H = y^2 and X H = sum_{n >= 4} omega_n x^n through degree N.
struct ObstructionSeries {
  Jet3 H;
  std::map<int, Coef> omegas;  // omega_4 .. omega_N
  std::optional<std::pair<int, Coef>> first_nonzero;
  int N = 0;
  /// (kernel constant c_k of y^k, index of the odd omega it annihilated)
  std::vector<std::pair<int, int>> eliminations;
  SideConditionSet side_conditions;
};

/// Builds H degree by degree: F_n collects the degree-n part of
/// P H_x + Q H_y + R H_z from H_{<n}, and solve_T gives H_n and omega_n.
/// The kernel constants c_k y^k stay free until an odd-index omega can be
/// annihilated with one of them; unused constants are set to zero. The
/// identity X H = sum omega_n x^n is re-checked on the result.
ObstructionSeries omega_series(const SystemModel& s, int N);

/// Jet of X H through degree N (zero for a formal first integral to order N).
Jet3 check_first_integral(const SystemModel& s, const Jet3& H, int N);

struct CenterVerdict {
  enum class Status { NotACenter, NotFormallyIntegrable, Focus, CenterConfirmed, Undecided };
  Status status = Status::Undecided;
  std::optional<int> index;  // omega index for the obstruction branches
  Coef value;
  int N = 0;
  std::string citation;
  std::string certificate;  // sufficiency argument for center-confirmed
  SideConditionSet side_conditions;
  std::string status_label() const;
  std::string summary() const;
};

/// Decision tree on a monodromic singular point:
///   beta = n - 1 with n odd -> focus;
///   first nonzero omega at an even index -> not a center;
///   first nonzero omega at an odd index -> not formally integrable only;
///   all omega zero, exact invariant manifold and a reversible or
///   Hamiltonian restriction -> center;
///   otherwise undecided to order N.
CenterVerdict center_verdict(const SystemModel& s, const AndreevData& d, const MonodromyVerdict& mono,
                             const ObstructionSeries& o, const SignContext& ctx = {});

}  // namespace nilcenter
