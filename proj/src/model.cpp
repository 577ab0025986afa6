#include "nilcenter/model.hpp"

#include <algorithm>

namespace nilcenter {

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::NonZero:
      return "!= 0";
    case Relation::Negative:
      return "< 0";
    case Relation::Positive:
      return "> 0";
  }
  return "?";
}

std::string SideCondition::to_string() const { return expr.to_string() + " " + relation_symbol(rel); }

void SideConditionSet::add(const Coef& expr, Relation rel, const std::string& origin) {
  if (expr.is_rational()) return;
  for (const auto& item : items_) {
    if (item.rel != rel) continue;
    const Coef ratio = expr / item.expr;
    if (!ratio.is_rational()) continue;
    if (rel == Relation::NonZero || ratio.rational_value() > 0) return;
  }
  items_.push_back({expr, rel, origin});
}

void SideConditionSet::merge(const SideConditionSet& o) {
  for (const auto& item : o.items_) add(item.expr, item.rel, item.origin);
}

std::optional<int> SignContext::sign(const Coef& e) const {
  if (e.is_rational()) return sgn(e.rational_value());
  for (const auto& a : assumptions_) {
    if (a.rel == Relation::NonZero) continue;
    const int s = a.rel == Relation::Negative ? -1 : 1;
    Coef power = a.expr;
    for (int k = 1; k <= 4; ++k, power *= a.expr) {
      const Coef ratio = e / power;
      if (ratio.is_rational() && ratio.rational_value() != 0) {
        const int sp = (k % 2 == 0) ? 1 : s;
        return sgn(ratio.rational_value()) * sp;
      }
    }
  }
  return std::nullopt;
}

bool SignContext::known_nonzero(const Coef& e) const {
  if (e.is_rational()) return !e.is_zero();
  if (sign(e)) return true;
  for (const auto& a : assumptions_) {
    Coef power = a.expr;
    for (int k = 1; k <= 4; ++k, power *= a.expr) {
      const Coef ratio = e / power;
      if (ratio.is_rational() && ratio.rational_value() != 0) return true;
    }
  }
  return false;
}

void SystemModel::check_order(int m) const {
  if (!exact && m > order)
    throw OrderError("requested order " + std::to_string(m) + " exceeds the declared jet order " + std::to_string(order));
}

Jet3 SystemModel::P_jet(int m) const {
  check_order(m);
  return Jet3(P, m);
}

Jet3 SystemModel::Q_jet(int m) const {
  check_order(m);
  return Jet3(Q, m);
}

Jet3 SystemModel::R_jet(int m) const {
  check_order(m);
  return Jet3(R, m);
}

std::array<Poly3, 3> SystemModel::field() const {
  return {Poly3::variable(1) + P, Q, Poly3::variable(2).scaled(-lambda) + R};
}

int SystemModel::max_degree() const { return std::max({P.degree(), Q.degree(), R.degree(), 1}); }

SystemModel SystemModel::substitute(const std::map<std::string, Coef>& values) const {
  auto sub = [&](const Poly3& p) { return p.map_coefficients([&](const Coef& c) { return c.substitute(values); }); };
  std::array<Poly3, 3> f = field();
  for (auto& comp : f) comp = sub(comp);
  std::vector<std::string> remaining;
  for (const auto& p : params)
    if (!values.count(p)) remaining.push_back(p);
  for (const auto& [name, v] : values)
    for (const auto& s : v.symbols())
      if (std::find(remaining.begin(), remaining.end(), s) == remaining.end()) remaining.push_back(s);
  return make_system(f, remaining, order, exact);
}

Jet2 PlanarSystem::xdot() const { return Jet2(Poly2::variable(1), order) + X2; }

Jet2 PlanarSystem::ydot() const { return Y2; }

namespace {

std::string describe(const Poly3::Exp& e) {
  const std::string m = Poly3::monomial_string(e);
  return m.empty() ? "constant term" : "monomial " + m;
}

}  // namespace

SystemModel make_system(const std::array<Poly3, 3>& field, std::vector<std::string> params, int order, bool exact) {
  static const char* names[] = {"dx", "dy", "dz"};
  SystemModel s;
  s.params = std::move(params);
  s.order = order;
  s.exact = exact;
  // Expected linear parts: dx -> y, dy -> 0, dz -> -lambda z.
  for (int i = 0; i < 3; ++i) {
    for (const auto& [e, c] : field[i].terms()) {
      const int d = degree_of(e);
      if (d >= 2) break;
      const bool allowed = (i == 0 && e == Poly3::Exp{0, 1, 0}) || (i == 2 && e == Poly3::Exp{0, 0, 1});
      if (!allowed)
        throw ValidationError("linear part violation in " + std::string(names[i]) + ": " + describe(e) +
                              " with coefficient " + c.to_string() + " is not allowed");
    }
    if (!exact && field[i].degree() > order)
      throw ValidationError(std::string(names[i]) + " has terms of degree " + std::to_string(field[i].degree()) +
                            " above the declared order " + std::to_string(order));
  }
  if (field[0].coeff({0, 1, 0}) != Coef(1))
    throw ValidationError("linear part violation in dx: coefficient of y must be 1, got " +
                          field[0].coeff({0, 1, 0}).to_string());
  s.lambda = -field[2].coeff({0, 0, 1});
  if (s.lambda.is_zero()) throw ValidationError("lambda = 0: dz must contain -lambda*z with lambda != 0");
  s.side_conditions.add(s.lambda, Relation::NonZero, "sysio");
  auto nonlinear = [](const Poly3& p) {
    Poly3 out;
    for (const auto& [e, c] : p.terms())
      if (degree_of(e) >= 2) out.add_term(e, c);
    return out;
  };
  s.P = nonlinear(field[0]);
  s.Q = nonlinear(field[1]);
  s.R = nonlinear(field[2]);
  return s;
}

}  // namespace nilcenter
