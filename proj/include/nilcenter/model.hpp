#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilcenter/poly.hpp"

namespace nilcenter {

enum class Relation { NonZero, Negative, Positive };

std::string relation_symbol(Relation r);

/// A symbolic assumption an analysis result depends on.
struct SideCondition {
  Coef expr;
  Relation rel;
  std::string origin;  // the stage that introduced it
  std::string to_string() const;
};

class SideConditionSet {
 public:
  /// Adds unless an equivalent condition (same relation, expression equal up
  /// to a positive constant, or any constant for NonZero) is present.
  void add(const Coef& expr, Relation rel, const std::string& origin);
  void merge(const SideConditionSet& o);
  const std::vector<SideCondition>& items() const { return items_; }
  bool empty() const { return items_.empty(); }

 private:
  std::vector<SideCondition> items_;
};

/// Decides signs of symbolic coefficients from user assumptions. An
/// expression is decided when it is a rational multiple of a small power of
/// an assumed expression; nothing is ever guessed.
class SignContext {
 public:
  SignContext() = default;
  explicit SignContext(std::vector<SideCondition> assumptions) : assumptions_(std::move(assumptions)) {}

  std::optional<int> sign(const Coef& e) const;
  bool known_nonzero(const Coef& e) const;
  const std::vector<SideCondition>& assumptions() const { return assumptions_; }

 private:
  std::vector<SideCondition> assumptions_;
};

/// x' = y + P, y' = Q, z' = -lambda z + R with P, Q, R of order >= 2.
struct SystemModel {
  Coef lambda;
  Poly3 P, Q, R;
  std::vector<std::string> params;
  /// Series are known through this degree. For exact systems it is only the
  /// default analysis order.
  int order = 12;
  /// True when P, Q, R are polynomials rather than truncated series.
  bool exact = true;
  SideConditionSet side_conditions;

  /// P, Q, R as jets of order m; OrderError when m exceeds a truncated input.
  Jet3 P_jet(int m) const;
  Jet3 Q_jet(int m) const;
  Jet3 R_jet(int m) const;
  void check_order(int m) const;

  /// Full components y + P, Q, -lambda z + R.
  std::array<Poly3, 3> field() const;
  int max_degree() const;

  /// Replace parameters by coefficients (rationals or expressions in the
  /// remaining parameters) and re-validate.
  SystemModel substitute(const std::map<std::string, Coef>& values) const;
};

/// Planar system x' = y + X2, y' = Y2 on a center manifold.
struct PlanarSystem {
  Jet2 X2, Y2;
  int order = 0;

  Jet2 xdot() const;
  Jet2 ydot() const;
};

/// Builds a model from full polynomial components and validates that the
/// linear part is y d/dx - lambda z d/dz. Throws ValidationError naming the
/// offending monomial.
SystemModel make_system(const std::array<Poly3, 3>& field, std::vector<std::string> params, int order, bool exact);

}  // namespace nilcenter
