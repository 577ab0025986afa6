#include "nilcenter/linops.hpp"

#include "nilcenter/series.hpp"

namespace nilcenter {

namespace {

void require_homogeneous(const Poly3& p, int n) {
  if (!p.is_homogeneous(n))
    throw PreconditionError("operator input must be homogeneous of degree " + std::to_string(n) + ": " + p.to_string());
}

}  // namespace

Poly3 HomogOperator::apply(const Poly3& p) const {
  require_homogeneous(p, n);
  const bool tilde = kind == OpKind::TTilde || kind == OpKind::LTilde;
  Poly3 out = tilde ? Poly3::variable(0) * p.partial(1) : Poly3::variable(1) * p.partial(0);
  out -= (Poly3::variable(2) * p.partial(2)).scaled(lambda);
  if (kind == OpKind::L || kind == OpKind::LTilde) out += p.scaled(lambda);
  return out;
}

std::vector<std::vector<Coef>> HomogOperator::matrix() const {
  const auto basis = monomial_basis<3>(n);
  std::vector<std::vector<Coef>> m(basis.size(), std::vector<Coef>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Poly3 img = apply(Poly3::monomial(basis[j]));
    for (std::size_t i = 0; i < basis.size(); ++i) m[i][j] = img.coeff(basis[i]);
  }
  return m;
}

// Coefficient (j,k,l) of T(p) is (j+1) p_{j+1,k-1,l} - lambda l p_{j,k,l}.
SolveResult solve_T(const Poly3& q, int n, const Coef& lambda) {
  require_homogeneous(q, n);
  if (lambda.is_zero()) throw PreconditionError("lambda must be nonzero");
  Poly3 p;
  for (int l = 1; l <= n; ++l) {
    for (int k = 0; k + l <= n; ++k) {
      const int j = n - k - l;
      Coef v = q.coeff({j, k, l});
      if (k >= 1) v += p.coeff({j + 1, k - 1, l}) * Coef(j + 1);
      p.set_term({j, k, l}, v / (lambda * Coef(l)));
    }
  }
  // z-free part: (a) p_{a,b,0} = -q_{a-1,b+1,0}; x^n is the leftover direction.
  for (int a = 1; a <= n; ++a) p.set_term({a, n - a, 0}, -q.coeff({a - 1, n - a + 1, 0}) / Coef(a));
  return {p, q.coeff({n, 0, 0})};
}

// Coefficient (j,k,l) of L(p) is (j+1) p_{j+1,k-1,l} - lambda (l-1) p_{j,k,l}.
SolveResult solve_L(const Poly3& q, int n, const Coef& lambda) {
  require_homogeneous(q, n);
  if (lambda.is_zero()) throw PreconditionError("lambda must be nonzero");
  Poly3 p;
  for (int l = 0; l <= n; ++l) {
    if (l == 1) continue;
    for (int k = 0; k + l <= n; ++k) {
      const int j = n - k - l;
      Coef v = q.coeff({j, k, l});
      if (k >= 1) v += p.coeff({j + 1, k - 1, l}) * Coef(j + 1);
      p.set_term({j, k, l}, v / (lambda * Coef(l - 1)));
    }
  }
  for (int a = 1; a <= n - 1; ++a) p.set_term({a, n - 1 - a, 1}, -q.coeff({a - 1, n - a, 1}) / Coef(a));
  return {p, q.coeff({n - 1, 0, 1})};
}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> reduce(std::vector<std::vector<Coef>>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const Coef inv = m[r][c].inverse();
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Coef f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(std::vector<std::vector<Coef>> m) { return int(reduce(m).size()); }

std::vector<std::vector<Coef>> null_space(std::vector<std::vector<Coef>> m) {
  std::vector<std::vector<Coef>> out;
  if (m.empty()) return out;
  const std::size_t cols = m[0].size();
  const auto pivots = reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Coef> v(cols);
    v[f] = Coef(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    out.push_back(v);
  }
  return out;
}

}  // namespace nilcenter
