#include "seplrc/linalg.hpp"

#include <utility>

namespace seplrc {

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < columns.size(); ++i) out(r, i) = (*this)(r, columns[i]);
  return out;
}

Echelon row_reduce(const Field& field, Matrix m, std::optional<std::size_t> pivot_cols) {
  const std::size_t limit = pivot_cols.value_or(m.cols());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).value == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const FieldElement scale = field.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = field.mul(m(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).value == 0) continue;
      const FieldElement factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = field.sub(m(r, c), field.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Field& field, const Matrix& m) { return row_reduce(field, m).rank(); }

Matrix left_kernel(const Field& field, const Matrix& m) {
  Matrix aug(m.rows(), m.cols() + m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols() + r) = field.one();
  }
  const Echelon ech = row_reduce(field, std::move(aug), m.cols());
  const std::size_t dim = m.rows() - ech.rank();
  Matrix kernel(dim, m.rows());
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t c = 0; c < m.rows(); ++c) kernel(k, c) = ech.reduced(ech.rank() + k, m.cols() + c);
  return row_reduce(field, std::move(kernel)).reduced;
}

std::optional<std::vector<FieldElement>> solve_left(const Field& field, const Matrix& m,
                                                    std::span<const FieldElement> target) {
  // c M = t  <=>  M^T c^T = t^T; reduce [M^T | t].
  Matrix aug(m.cols(), m.rows() + 1);
  for (std::size_t r = 0; r < m.cols(); ++r) {
    for (std::size_t c = 0; c < m.rows(); ++c) aug(r, c) = m(c, r);
    aug(r, m.rows()) = target[r];
  }
  const Echelon ech = row_reduce(field, std::move(aug), m.rows());
  for (std::size_t r = ech.rank(); r < m.cols(); ++r)
    if (ech.reduced(r, m.rows()).value != 0) return std::nullopt;
  std::vector<FieldElement> sol(m.rows());
  for (std::size_t i = 0; i < ech.rank(); ++i) sol[ech.pivots[i]] = ech.reduced(i, m.rows());
  return sol;
}

std::vector<FieldElement> vec_mat(const Field& field, std::span<const FieldElement> vec, const Matrix& m) {
  std::vector<FieldElement> out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (vec[r].value == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = field.add(out[c], field.mul(vec[r], m(r, c)));
  }
  return out;
}

}  // namespace seplrc
