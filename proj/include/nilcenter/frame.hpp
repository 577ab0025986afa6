#pragma once

#include <array>

#include "nilcenter/model.hpp"

namespace nilcenter {

using Matrix3 = std::array<std::array<Coef, 3>, 3>;

/// old = shift + M * new.
struct LinearChange {
  std::array<Coef, 3> shift{};
  Matrix3 M{};
  static LinearChange identity();
};

Coef determinant(const Matrix3& M);
/// Exact inverse; FrameError when singular.
Matrix3 inverse(const Matrix3& M);

/// Pushes a raw polynomial field through a user-supplied affine change and
/// verifies that the result has linear part y d/dx - lambda z d/dz. The change
/// is verified, not discovered. Throws FrameError otherwise.
SystemModel bring_to_nilpotent_frame(const std::array<Poly3, 3>& raw, const LinearChange& change,
                                     std::vector<std::string> params, int order = 12);

}  // namespace nilcenter
