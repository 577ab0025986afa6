#include "nilcenter/series.hpp"

namespace nilcenter {

Jet2 substitute_z(const Jet3& p, const Jet2& s) {
  const Jet2 x = Jet2::exact(Poly2::variable(0));
  const Jet2 y = Jet2::exact(Poly2::variable(1));
  return compose<3, 2>(p, {x, y, s});
}

Jet1 implicit_solve(const Jet2& G) {
  if (!G.poly().coeff({0, 0}).is_zero()) throw SingularImplicitError("G(0,0) is not zero");
  const Coef gy = G.poly().coeff({0, 1});
  if (gy.is_zero()) throw SingularImplicitError("coefficient of y in G vanishes");
  const int order = G.order();
  if (order >= kExact) throw OrderError("implicit_solve needs a finite order");
  const Jet1 x = Jet1::exact(Poly1::variable(0));
  Poly1 F;
  // Each pass fixes one more degree: the x^k coefficient of G(x, F) is
  // r_k + gy * F_k when F is already correct below degree k.
  for (int k = 1; k <= order; ++k) {
    const Jet1 r = compose<2, 1>(G, {x, Jet1(F, order)});
    const Coef rk = r.poly().coeff({k});
    if (!rk.is_zero()) F.add_term({k}, -rk / gy);
  }
  return Jet1(F, order);
}

std::vector<Coef> coefficients(const Jet1& f) {
  std::vector<Coef> out(std::max(0, f.order()) + 1);
  for (const auto& [e, c] : f.poly().terms())
    if (e[0] < int(out.size())) out[e[0]] = c;
  return out;
}

}  // namespace nilcenter
