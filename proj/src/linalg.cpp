#include "formcone/linalg.hpp"

#include "formcone/errors.hpp"

namespace formcone {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

std::vector<std::size_t> Matrix::rref() {
  const Field& k = field_;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && at(p, col) == 0) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(p, c), at(row, c));
    Scalar inv = k.inv(at(row, col));
    for (std::size_t c = col; c < cols_; ++c) at(row, c) = k.mul(at(row, c), inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0) continue;
      Scalar f = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) at(r, c) = k.sub(at(r, c), k.mul(f, at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

std::vector<std::vector<Scalar>> Matrix::kernel() const {
  Matrix m = *this;
  auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_.neg(m.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw MathError("matrix dimension mismatch");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c.at(i, j) = a.field_.add(c.at(i, j), a.field_.mul(a.at(i, k), b.at(k, j)));
    }
  return c;
}

}  // namespace formcone
