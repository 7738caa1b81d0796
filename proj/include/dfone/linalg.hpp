#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dfone/rational.hpp"

namespace dfone {

/// Dense row-major matrix over exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector column(std::size_t c) const;
  RationalMatrix transpose() const;
  /// Keeps the listed rows and columns, in the given order.
  RationalMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Deletes the listed rows and columns.
  RationalMatrix minor_matrix(const std::vector<std::size_t>& drop_rows, const std::vector<std::size_t>& drop_cols) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalVector operator*(const RationalMatrix& a, const RationalVector& x);

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RationalMatrix& m);

/// Basis of { x : m x = 0 }, one vector per free column.
std::vector<RationalVector> null_space(const RationalMatrix& m);

/// Basis of the column span made of the pivot columns of `m`.
std::vector<RationalVector> column_space(const RationalMatrix& m);

/// Solves a square system. Returns nullopt when `a` is singular.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

std::optional<RationalMatrix> inverse(const RationalMatrix& a);

/// Fraction-free (Bareiss) elimination. The empty matrix has determinant 1.
Rational determinant(const RationalMatrix& a);

/// Matrix whose columns are the given vectors (all of length `rows`).
RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

}  // namespace dfone
