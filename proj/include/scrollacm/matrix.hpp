#pragma once

#include "scrollacm/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace scrollacm {

/// Dense row-major matrix over Q with exact entries.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Column matrix from a vector.
  static Matrix column(const std::vector<Rational>& entries);
  /// Columns side by side; all must share the row count `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column_vector(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Rational>& v);

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank via fraction-free (Bareiss) elimination after clearing denominators row by row.
std::size_t rank(const Matrix& m);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Reduced row echelon form; the pivot in each column is the first nonzero row.
RowEchelon rref(const Matrix& m);

/// Basis of the right kernel, one vector per free column, as columns of the result.
Matrix kernel(const Matrix& m);

/// Exact inverse. Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// Some solution x of a*x = b (b may have several columns), or nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Extends the independent columns of `basis` (n x k) to an invertible n x n matrix
/// whose first k columns are `basis`; the remaining columns are unit vectors.
/// Throws std::domain_error if the columns are dependent.
Matrix complete_basis(const Matrix& basis);

/// Horizontal concatenation; row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);
/// Direct sum diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

}  // namespace scrollacm
