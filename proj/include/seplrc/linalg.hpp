#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "seplrc/galois.hpp"

namespace seplrc {

/// Dense row-major matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> columns) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination; pivots are searched only in the first
/// `pivot_cols` columns (all columns by default).
Echelon row_reduce(const Field& field, Matrix m, std::optional<std::size_t> pivot_cols = std::nullopt);
std::size_t rank(const Field& field, const Matrix& m);

/// Rows span {c : c M = 0}, in reduced echelon form.
Matrix left_kernel(const Field& field, const Matrix& m);

/// Some c with c M = target, or nullopt if none exists.
std::optional<std::vector<FieldElement>> solve_left(const Field& field, const Matrix& m,
                                                    std::span<const FieldElement> target);

/// message * M
std::vector<FieldElement> vec_mat(const Field& field, std::span<const FieldElement> vec, const Matrix& m);

}  // namespace seplrc
