#pragma once

#include <vector>

#include "nilcenter/poly.hpp"

namespace nilcenter {

/// Graded operators on homogeneous polynomials of degree n in x, y, z:
///   T(p)  = y p_x - lambda z p_z        L(p)  = T(p) + lambda p
///   T~(p) = x p_y - lambda z p_z        L~(p) = T~(p) + lambda p
enum class OpKind { T, L, TTilde, LTilde };

struct HomogOperator {
  OpKind kind;
  int n;
  Coef lambda;

  /// Throws PreconditionError when p is not homogeneous of degree n.
  Poly3 apply(const Poly3& p) const;
  /// Dense matrix over the ascending grlex monomial basis; column j is the
  /// image of basis monomial j.
  std::vector<std::vector<Coef>> matrix() const;
};

struct SolveResult {
  Poly3 p;
  Coef residue;  // omega for solve_T, kappa for solve_L
};

/// T_n(p) + q = omega x^n with the y^n coefficient of p pinned to zero.
SolveResult solve_T(const Poly3& q, int n, const Coef& lambda);
/// L_n(p) + q = kappa x^{n-1} z with the y^{n-1} z coefficient of p pinned to zero.
SolveResult solve_L(const Poly3& q, int n, const Coef& lambda);

/// Rank of a matrix by exact Gaussian elimination.
int rank(std::vector<std::vector<Coef>> m);
/// Basis of the null space (column vectors) of m.
std::vector<std::vector<Coef>> null_space(std::vector<std::vector<Coef>> m);

}  // namespace nilcenter
