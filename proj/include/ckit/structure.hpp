#pragma once

#include "ckit/matrix.hpp"

namespace ckit {

/// Nonsingular symmetric form Q with an isometry T (T^t Q T = Q).
struct IsometricStructure {
  RatMatrix Q;
  RatMatrix T;

  std::size_t dim() const { return Q.rows(); }
  /// Throws InternalError when an invariant fails.
  void check() const;
  IsometricStructure operator-() const { return {-Q, T}; }
};

/// Orthogonal sum.
IsometricStructure block_sum(const IsometricStructure& a, const IsometricStructure& b);

}  // namespace ckit
