#pragma once

#include <cstddef>
#include <vector>

#include "alex/error.hpp"
#include "alex/laurent.hpp"

namespace alex {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Builds from nested rows; all rows must share a length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty = 0) {
    Matrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InputError("matrix rows have different lengths");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Submatrix on the given row and column index lists, in that order.
  Matrix select(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using PolyMatrix = Matrix<LaurentPoly>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Determinant over Z by fraction-free elimination.
Integer determinant(const IntMatrix& m);

/// Determinant over the Laurent ring in `num_vars` variables. Cofactor
/// expansion below size 5, fraction-free (Bareiss) elimination above.
/// The empty matrix has determinant 1.
LaurentPoly determinant(const PolyMatrix& m, std::size_t num_vars);

/// Same, always by cofactor expansion. Exponential; test oracle for small sizes.
LaurentPoly cofactor_determinant(const PolyMatrix& m, std::size_t num_vars);

}  // namespace alex
