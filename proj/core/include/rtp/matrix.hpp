#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "rtp/rational.hpp"

namespace rtp {

// Ordered, strictly increasing set of row or column indices.
using IndexSet = std::vector<std::size_t>;

// Dense row-major matrix of exact rationals. Rectangular shapes are allowed.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  // Throws PreconditionError if the rows are ragged.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  // Leading rows x cols block. Throws PreconditionError if it does not fit.
  Matrix leading(std::size_t rows, std::size_t cols) const;
  Matrix leading(std::size_t n) const { return leading(n, n); }

  // Submatrix on the given (ordered) rows and columns.
  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Throws PreconditionError on inner-dimension mismatch.
Matrix operator*(const Matrix& lhs, const Matrix& rhs);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace rtp
