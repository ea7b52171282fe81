#include "prolong/linear.hpp"

#include <utility>

namespace prolong {

std::vector<std::size_t> row_reduce(Matrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const BaseElem inv = m[row][col].inv();
    for (auto& e : m[row]) e *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const BaseElem f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m, std::size_t columns) { return row_reduce(m, columns).size(); }

std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b, std::size_t columns) {
  Matrix aug;
  aug.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    Vector row = a[r];
    row.resize(columns);
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  const auto pivots = row_reduce(aug, columns);
  for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
    if (!aug[r][columns].is_zero()) return std::nullopt;
  }
  AffineSolution sol;
  sol.particular.assign(columns, BaseElem());
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    sol.particular[pivots[k]] = aug[k][columns];
    is_pivot[pivots[k]] = true;
  }
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Vector v(columns, BaseElem());
    v[free] = BaseElem(1L);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -aug[k][free];
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

Vector mat_vec(const Matrix& a, const Vector& x) {
  Vector out;
  out.reserve(a.size());
  for (const auto& row : a) {
    BaseElem acc;
    for (std::size_t c = 0; c < row.size(); ++c) acc += row[c] * x[c];
    out.push_back(std::move(acc));
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b.front().size();
  Matrix out(a.size(), Vector(cols));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      BaseElem acc;
      for (std::size_t k = 0; k < inner; ++k) acc += a[r][k] * b[k][c];
      out[r][c] = std::move(acc);
    }
  }
  return out;
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = BaseElem(1L);
  return m;
}

}  // namespace prolong
