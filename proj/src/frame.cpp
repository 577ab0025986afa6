#include "nilcenter/frame.hpp"

#include "nilcenter/series.hpp"

namespace nilcenter {

LinearChange LinearChange::identity() {
  LinearChange c;
  for (int i = 0; i < 3; ++i) c.M[i][i] = Coef(1);
  return c;
}

Coef determinant(const Matrix3& M) {
  return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
         M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

Matrix3 inverse(const Matrix3& M) {
  const Coef det = determinant(M);
  if (det.is_zero()) throw FrameError("change of coordinates is singular");
  Matrix3 inv;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // Cofactor of entry (j, i), giving the adjugate.
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (M[r0][c0] * M[r1][c1] - M[r0][c1] * M[r1][c0]) / det;
    }
  }
  return inv;
}

SystemModel bring_to_nilpotent_frame(const std::array<Poly3, 3>& raw, const LinearChange& change,
                                     std::vector<std::string> params, int order) {
  std::array<Jet3, 3> subs;
  for (int i = 0; i < 3; ++i) {
    Poly3 s(change.shift[i]);
    for (int j = 0; j < 3; ++j) s += Poly3::variable(j).scaled(change.M[i][j]);
    subs[i] = Jet3::exact(s);
  }
  std::array<Poly3, 3> moved;
  for (int i = 0; i < 3; ++i) moved[i] = compose<3, 3>(Jet3::exact(raw[i]), subs).poly();
  const Matrix3 inv = inverse(change.M);
  std::array<Poly3, 3> field;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) field[i] += moved[j].scaled(inv[i][j]);
  for (int i = 0; i < 3; ++i)
    if (!field[i].coeff({0, 0, 0}).is_zero())
      throw FrameError("the shifted point is not an equilibrium: component " + std::to_string(i) +
                       " has constant term " + field[i].coeff({0, 0, 0}).to_string());
  try {
    return make_system(field, std::move(params), order, true);
  } catch (const ValidationError& e) {
    throw FrameError(std::string("resulting linear part is not y d/dx - lambda z d/dz: ") + e.what());
  }
}

}  // namespace nilcenter
