#pragma once

#include <vector>

#include "nilcenter/poly.hpp"

namespace nilcenter {

/// p(s_0, ..., s_{NIn-1}) as a jet in NOut variables, truncated to
/// min(order(p), order(s_i)). Substitutions with a nonzero constant term are
/// allowed only into an exact polynomial; otherwise the truncation guarantee
/// would break and OrderError is thrown.
template <std::size_t NIn, std::size_t NOut>
Jet<NOut> compose(const Jet<NIn>& p, const std::array<Jet<NOut>, NIn>& subs) {
  int order = p.order();
  for (const auto& s : subs) order = std::min(order, s.order());
  for (const auto& s : subs) {
    if (!p.is_exact() && !s.poly().coeff(Exponent<NOut>{}).is_zero())
      throw OrderError("substitution with a nonzero constant term into a truncated series");
  }
  std::array<std::vector<Poly<NOut>>, NIn> powers;
  for (std::size_t i = 0; i < NIn; ++i) powers[i].push_back(Poly<NOut>(Coef(1)));
  auto power = [&](std::size_t i, int e) -> const Poly<NOut>& {
    auto& v = powers[i];
    while (int(v.size()) <= e) v.push_back(Poly<NOut>::multiply(v.back(), subs[i].poly(), order));
    return v[e];
  };
  Poly<NOut> out;
  for (const auto& [e, c] : p.poly().terms()) {
    Poly<NOut> term(c);
    for (std::size_t i = 0; i < NIn && !term.is_zero(); ++i)
      if (e[i] > 0) term = Poly<NOut>::multiply(term, power(i, e[i]), order);
    out += term;
  }
  return Jet<NOut>(std::move(out), order);
}

/// p(x, y, s(x, y)).
Jet2 substitute_z(const Jet3& p, const Jet2& s);

/// The unique F with G(x, F(x)) = 0 through order(G). Requires G(0,0) = 0 and
/// a nonzero y-coefficient; otherwise SingularImplicitError.
Jet1 implicit_solve(const Jet2& G);

/// All exponents of total degree n in N variables, ascending grlex.
template <std::size_t N>
std::vector<Exponent<N>> monomial_basis(int n) {
  std::vector<Exponent<N>> out;
  Exponent<N> e{};
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == N) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (n >= 0) rec(0, n);
  std::sort(out.begin(), out.end(), GrlexLess<N>());
  return out;
}

/// Embed x -> (x, 0) etc.: a polynomial in fewer variables viewed in more.
template <std::size_t NOut, std::size_t NIn>
Poly<NOut> embed(const Poly<NIn>& p) {
  static_assert(NIn <= NOut);
  Poly<NOut> out;
  for (const auto& [e, c] : p.terms()) {
    Exponent<NOut> f{};
    for (std::size_t i = 0; i < NIn; ++i) f[i] = e[i];
    out.add_term(f, c);
  }
  return out;
}

template <std::size_t NOut, std::size_t NIn>
Jet<NOut> embed(const Jet<NIn>& p) {
  return Jet<NOut>(embed<NOut>(p.poly()), p.order());
}

/// Coefficient list c_0..c_order of a jet in x.
std::vector<Coef> coefficients(const Jet1& f);

}  // namespace nilcenter
