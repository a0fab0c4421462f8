#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "fecc/rational.hpp"

namespace fecc {

/// Small dense row-major matrix. Indices are 0-based; reports translate to
/// the 1-based functional/basis numbering.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t size) {
    Matrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// Copy without the last row and the last column.
  Matrix without_last_row_col() const {
    Matrix out(rows_ == 0 ? 0 : rows_ - 1, cols_ == 0 ? 0 : cols_ - 1);
    for (std::size_t i = 0; i < out.rows_; ++i)
      for (std::size_t j = 0; j < out.cols_; ++j) out(i, j) = (*this)(i, j);
    return out;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    assert(v.size() == cols_);
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

/// Exact rank.
std::size_t rank(const RationalMatrix& a);

/// Kronecker product a (x) b.
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

RealMatrix to_real(const RationalMatrix& a);

}  // namespace fecc
