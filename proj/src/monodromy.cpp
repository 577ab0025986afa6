#include "nilcenter/monodromy.hpp"

#include "nilcenter/series.hpp"

namespace nilcenter {

Coef coefficient(const Jet1& f, int k) { return f.poly().coeff({k}); }

namespace {

std::optional<int> first_nonzero(const Jet1& f) {
  if (f.poly().is_zero()) return std::nullopt;
  return f.poly().terms().begin()->first[0];
}

}  // namespace

AndreevData andreev_data(const PlanarSystem& pl) {
  if (pl.order < 3) throw PreconditionError("Andreev data needs a jet of order at least 3");
  AndreevData d;
  d.order = pl.order;
  const Jet2 xdot = pl.xdot().with_order(pl.order);
  const Jet2 ydot = pl.Y2.with_order(pl.order);
  d.F = implicit_solve(xdot);
  const Jet1 x = Jet1::exact(Poly1::variable(0));
  d.f = compose<2, 1>(ydot, {x, d.F});
  const Jet2 div(xdot.poly().partial(0) + ydot.poly().partial(1), pl.order - 1);
  d.Phi = compose<2, 1>(div, {x, d.F.with_order(pl.order - 1)});

  d.alpha = first_nonzero(d.f);
  if (d.alpha) {
    d.a = coefficient(d.f, *d.alpha);
    d.side_conditions.add(d.a, Relation::NonZero, "andreev_data");
  }
  d.beta = first_nonzero(d.Phi);
  if (d.beta) d.b = coefficient(d.Phi, *d.beta);
  if (d.alpha && *d.alpha % 2 == 1) {
    const int n = (*d.alpha + 1) / 2;
    d.n = n;
    d.a_tilde = coefficient(d.f, 2 * n - 1);
    d.b_tilde = coefficient(d.Phi, n - 1);
    d.Delta = d.b_tilde * d.b_tilde + d.a_tilde * Coef(4 * n);
  }
  return d;
}

std::string MonodromyVerdict::status_label() const {
  switch (status) {
    case Status::Monodromic:
      return "monodromic";
    case Status::NotMonodromic:
      return "not-monodromic";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string MonodromyVerdict::condition_label() const {
  switch (condition) {
    case Condition::I:
      return "i";
    case Condition::II:
      return "ii";
    case Condition::None:
      return "";
  }
  return "";
}

MonodromyVerdict classify_monodromy(const AndreevData& d, const SignContext& ctx) {
  using S = MonodromyVerdict::Status;
  MonodromyVerdict v;
  if (!d.alpha) {
    v.status = S::Inconclusive;
    v.reason = "f vanishes through order " + std::to_string(d.order) + " (jet-bound); raise the order";
    return v;
  }
  if (*d.alpha % 2 == 0) {
    v.status = S::NotMonodromic;
    v.reason = "alpha = " + std::to_string(*d.alpha) + " is even";
    v.side_conditions.add(d.a, Relation::NonZero, "monodromy");
    return v;
  }
  const int n = *d.n;
  v.n = n;
  if (d.beta && *d.beta < n - 1) {
    v.status = S::NotMonodromic;
    v.reason = "beta = " + std::to_string(*d.beta) + " < n - 1 = " + std::to_string(n - 1);
    v.side_conditions.add(d.b, Relation::NonZero, "monodromy");
    return v;
  }
  if (d.Delta.is_zero()) {
    v.status = S::NotMonodromic;
    v.reason = "Delta = 0";
    return v;
  }
  const auto sign = ctx.sign(d.Delta);
  if (sign && *sign > 0) {
    v.status = S::NotMonodromic;
    v.reason = "Delta = " + d.Delta.to_string() + " > 0";
    return v;
  }
  v.status = S::Monodromic;
  if (!sign) {
    v.side_conditions.add(d.Delta, Relation::Negative, "monodromy");
    v.reason = "monodromic with Andreev number " + std::to_string(n) + " provided Delta = " + d.Delta.to_string() +
               " < 0";
  } else {
    // Delta < 0 forces a_tilde < 0 because b_tilde^2 >= 0.
    if (d.a_tilde.is_rational() && d.b_tilde.is_rational() && d.a_tilde.rational_value() >= 0)
      throw InternalError("Delta < 0 with nonnegative leading coefficient");
    v.reason = "Delta = " + d.Delta.to_string() + " < 0";
  }
  if (d.b_tilde.is_zero()) {
    v.condition = MonodromyVerdict::Condition::I;
  } else {
    v.condition = MonodromyVerdict::Condition::II;
    v.side_conditions.add(d.b_tilde, Relation::NonZero, "monodromy");
  }
  return v;
}

std::string Andreev2Condition::to_string() const { return lhs.to_string() + " < " + rhs.to_string(); }

Andreev2Condition andreev2_condition(const SystemModel& s) {
  const Coef b200 = s.Q.coeff({2, 0, 0});
  if (!b200.is_zero())
    throw PreconditionError("the Andreev number 2 test needs b200 = 0, got b200 = " + b200.to_string());
  const Coef a200 = s.P.coeff({2, 0, 0});
  const Coef b110 = s.Q.coeff({1, 1, 0}), b101 = s.Q.coeff({1, 0, 1}), b300 = s.Q.coeff({3, 0, 0});
  const Coef c200 = s.R.coeff({2, 0, 0});
  Andreev2Condition c;
  c.lhs = b101 * c200 / s.lambda;
  const Coef t = a200 * Coef(2) - b110;
  c.rhs = -(t * t) / Coef(8) - b300;
  c.beta_flag = a200 * Coef(2) + b110;
  return c;
}

Coef beta_shortcut(const AndreevData& d) {
  if (!d.n || d.b_tilde.is_zero())
    throw PreconditionError("the shortcut applies only on the beta = n - 1 branch");
  return Coef(-2) * d.a_tilde * d.b_tilde / Coef(*d.n);
}

}  // namespace nilcenter
