#include "fecc/matrix.hpp"

namespace fecc {

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) return std::nullopt;
  RationalMatrix work = a;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    work.swap_rows(pivot, col);
    inv.swap_rows(pivot, col);
    const Rational scale = Rational(1) / work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work(i, col).is_zero()) continue;
      const Rational f = work(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= f * work(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix work = a;
  std::size_t r = 0;
  for (std::size_t col = 0; col < work.cols() && r < work.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < work.rows() && work(pivot, col).is_zero()) ++pivot;
    if (pivot == work.rows()) continue;
    work.swap_rows(pivot, r);
    for (std::size_t i = r + 1; i < work.rows(); ++i) {
      if (work(i, col).is_zero()) continue;
      const Rational f = work(i, col) / work(r, col);
      for (std::size_t j = col; j < work.cols(); ++j) work(i, j) -= f * work(r, j);
    }
    ++r;
  }
  return r;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

RealMatrix to_real(const RationalMatrix& a) {
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).to_double();
  return out;
}

}  // namespace fecc
