#pragma once

#include <optional>
#include <vector>

#include "ckit/matrix.hpp"

namespace ckit {

/// Fraction-free (Bareiss) determinant.
Int det(const IntMatrix& m);
Rat det(const RatMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Reduced row echelon form; `pivots` receives the pivot column indices.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of the column span: the pivot columns of `m`.
RatMatrix column_basis(const RatMatrix& m);

/// Basis (as columns) of {x : m x = 0}.
RatMatrix kernel(const RatMatrix& m);

/// Solve A X = B for A of full column rank; nullopt when inconsistent.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);

/// Scales a rational vector to a primitive integer vector (same direction).
std::vector<Int> primitive_integer(const std::vector<Rat>& v);

/// Invariant factors of the Smith normal form (including 1s and 0s), in
/// divisibility order, length min(rows, cols).
std::vector<Int> smith_invariants(const IntMatrix& m);

/// Columns of the result form a Z-basis of the lattice generated by the
/// columns of `gens` (rank must equal the row count).
IntMatrix lattice_basis(const IntMatrix& gens);

/// Unimodular U whose first column is the primitive vector x.
IntMatrix unimodular_with_first_column(const std::vector<Int>& x);

}  // namespace ckit
