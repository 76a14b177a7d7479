#include "ckit/structure.hpp"

namespace ckit {

void IsometricStructure::check() const {
  CKIT_ASSERT(Q.square() && T.square() && Q.rows() == T.rows(), "structure shape mismatch");
  CKIT_ASSERT(Q.is_symmetric(), "structure form not symmetric");
  CKIT_ASSERT(T.transpose() * Q * T == Q, "T is not an isometry of Q");
}

IsometricStructure block_sum(const IsometricStructure& a, const IsometricStructure& b) {
  return {block_sum(a.Q, b.Q), block_sum(a.T, b.T)};
}

}  // namespace ckit
