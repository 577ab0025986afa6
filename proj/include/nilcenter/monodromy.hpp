#pragma once

#include <optional>
#include <string>

#include "nilcenter/model.hpp"

namespace nilcenter {

/// Andreev data of x' = y + X2, y' = Y2: F solves y + X2(x, y) = 0,
/// f(x) = Y2(x, F(x)) and Phi(x) is the divergence along y = F(x).
struct AndreevData {
  Jet1 F, f, Phi;
  std::optional<int> alpha;  // first nonzero index of f; empty when flat to the order
  Coef a;
  std::optional<int> beta;  // first nonzero index of Phi; empty when flat
  Coef b;
  std::optional<int> n;  // (alpha + 1) / 2 for odd alpha
  Coef a_tilde;          // coefficient of x^{2n-1} in f
  Coef b_tilde;          // coefficient of x^{n-1} in Phi
  Coef Delta;            // b_tilde^2 + 4 a_tilde n
  int order = 0;
  /// Symbolic leading coefficients taken as nonzero.
  SideConditionSet side_conditions;
};

AndreevData andreev_data(const PlanarSystem& pl);

/// Coefficient of x^k in a jet in x (zero beyond the stored terms).
Coef coefficient(const Jet1& f, int k);

struct MonodromyVerdict {
  enum class Status { Monodromic, NotMonodromic, Inconclusive };
  enum class Condition { None, I, II };  // I: beta > n-1 or Phi flat; II: beta = n-1
  Status status = Status::Inconclusive;
  std::optional<int> n;
  Condition condition = Condition::None;
  std::string reason;
  /// Monodromic only under these symbolic conditions.
  SideConditionSet side_conditions;
  std::string status_label() const;
  std::string condition_label() const;
};

/// Monodromy with Andreev number n iff Delta < 0 (under j^{2n-2} f = 0 and
/// j^{n-2} Phi = 0). Signs are decided only from rational values or the
/// given assumptions; otherwise they become side conditions.
MonodromyVerdict classify_monodromy(const AndreevData& d, const SignContext& ctx = {});

/// Andreev number 2 test read off the quadratic/cubic coefficients:
///   b101 c200 / lambda < -(2 a200 - b110)^2 / 8 - b300,
/// with beta = n - 1 iff 2 a200 + b110 != 0. Requires b200 = 0.
struct Andreev2Condition {
  Coef lhs;          // b101 c200 / lambda
  Coef rhs;          // -(2 a200 - b110)^2 / 8 - b300
  Coef beta_flag;    // 2 a200 + b110
  Coef difference() const { return lhs - rhs; }  // monodromic iff < 0
  std::string to_string() const;
};

Andreev2Condition andreev2_condition(const SystemModel& s);

/// -2 a b / n for the beta = n - 1 branch, with a = a_tilde, b = b_tilde.
Coef beta_shortcut(const AndreevData& d);

}  // namespace nilcenter
