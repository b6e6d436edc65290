#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "wps/field.hpp"

namespace wps {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  T* row(std::size_t i) { return data_.data() + i * cols_; }
  const T* row(std::size_t i) const { return data_.data() + i * cols_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Stack `other` below this matrix. Column counts must agree.
  void append_rows(const Matrix& other) {
    if (rows_ == 0) cols_ = other.cols_;
    if (other.cols_ != cols_) throw std::invalid_argument("column mismatch in append_rows");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Gaussian elimination over F_p. Takes the matrix by value.
std::size_t rank(const PrimeField& field, Matrix<std::uint64_t> m);

/// Exact rank over ℚ: rows are scaled to integers, then Bareiss.
std::size_t rank(const RationalField& field, const Matrix<mpq_class>& m);

/// Fraction-free (Bareiss) rank of an integer matrix.
std::size_t rank_bareiss(Matrix<mpz_class> m);

/// Bareiss determinant of a square integer matrix.
mpz_class determinant_bareiss(Matrix<mpz_class> m);

/// Determinant of a square rational matrix.
mpq_class determinant(const Matrix<mpq_class>& m);

/// Basis of the right kernel {x : m x = 0} over ℚ.
std::vector<std::vector<mpq_class>> nullspace(const Matrix<mpq_class>& m);

/// Reduce each entry of a rational matrix into F_p.
Matrix<std::uint64_t> reduce(const PrimeField& field, const Matrix<mpq_class>& m);

}  // namespace wps
