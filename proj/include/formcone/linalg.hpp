#pragma once

#include <vector>

#include "formcone/field.hpp"

namespace formcone {

// Dense matrix over a field, exact. Rows x cols, row-major.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rank() const;
  // Basis of {v : M v = 0}.
  std::vector<std::vector<Scalar>> kernel() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();

  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

}  // namespace formcone
