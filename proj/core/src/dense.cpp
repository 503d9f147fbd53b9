#include "signdet/dense.hpp"

#include <sstream>
#include <utility>

namespace signdet {

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rat scale = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rat f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<Rat> solve_dense(RatMatrix a, std::vector<Rat> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_dense: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("solve_dense: singular matrix");
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rat f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      b[i] -= f * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  return x;
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

}  // namespace signdet
