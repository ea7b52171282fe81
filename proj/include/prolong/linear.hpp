#pragma once

#include <optional>
#include <vector>

#include "prolong/basefield.hpp"

namespace prolong {

using Vector = std::vector<BaseElem>;
using Matrix = std::vector<Vector>;

struct AffineSolution {
  Vector particular;
  std::vector<Vector> kernel;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t columns);

std::size_t rank(Matrix m, std::size_t columns);

/// All x with A x = b over the base field, as particular + span(kernel).
/// Free variables are set to zero in the particular solution. Empty when
/// the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b, std::size_t columns);

Vector mat_vec(const Matrix& a, const Vector& x);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix identity_matrix(std::size_t n);

}  // namespace prolong
