#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "signdet/rational.hpp"

namespace signdet {

/// Row-major dense matrix. Used for reference computations only; the
/// structured solver never materializes its system.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != T(i == j ? 1 : 0)) return false;
    return true;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  std::vector<T> apply(std::span<const T> x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * x[j];
    return out;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<long>;
using RatMatrix = DenseMatrix<Rat>;

RatMatrix to_rat(const IntMatrix& m);

/// Gauss-Jordan inverse; nullopt if singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Solves m x = b by Gaussian elimination. Throws std::domain_error if m is singular.
std::vector<Rat> solve_dense(RatMatrix m, std::vector<Rat> b);

std::string to_string(const RatMatrix& m);

}  // namespace signdet
