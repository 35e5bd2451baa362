#pragma once

#include <optional>
#include <vector>

#include "ainfty/matrix.hpp"

namespace ainfty {

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r,
// nonnegative. Uinv, Vinv are the tracked inverses (also unimodular).
struct SmithNormalForm {
  Matrix U, Uinv, D, V, Vinv;
  int rank = 0;
  std::vector<BigInt> diagonal;  // nonzero invariant factors, length == rank
};

// Integer matrices only. Pivot choice: entry of least absolute value in the
// active submatrix, ties broken by (row, col) ascending.
SmithNormalForm smith_normal_form(const Matrix& m);

int rank(const Matrix& m);

// One solution of M x = b, or nullopt. Over a field: Gaussian elimination,
// pivots scanned in (row, column) ascending order, free variables zero.
// Over Z: exact-divisibility solve through the Smith form.
std::optional<Vec> solve_exact(const Matrix& m, const Vec& b);

// Column-wise solve of M X = B with one factorization.
std::optional<Matrix> solve_many(const Matrix& m, const Matrix& b);

// Basis of ker M as columns. Over Z the result spans a pure submodule, so it
// extends to a basis of the ambient lattice.
Matrix kernel_basis(const Matrix& m);

// Basis of im M as columns. Over a field: the original columns at pivot
// positions. Over Z: the lattice basis d_k * Uinv e_k from the Smith form.
Matrix image_basis(const Matrix& m);

// Inverse of a square matrix; over Z it must be unimodular.
Matrix inverse(const Matrix& m);

}  // namespace ainfty
