#include "scrollacm/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace scrollacm {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : row) data_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const std::vector<Rational>& entries) {
  Matrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

std::vector<Rational> Matrix::column_vector(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const std::vector<Rational>& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
  Matrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw std::out_of_range("block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in *");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) m(i, j) += x * b(k, j);
      }
    }
  }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << scrollacm::to_string((*this)(r, c));
  }
  os << "]";
  return os.str();
}

std::size_t rank(const Matrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  // Scale each row to integers, then run Bareiss: every intermediate entry
  // is a minor of the integer matrix, so the divisions are exact.
  std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < nc; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < nc; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  Integer prev = 1;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < nc && rk < nr; ++col) {
    std::size_t piv = rk;
    while (piv < nr && a[piv][col] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t r = rk + 1; r < nr; ++r) {
      for (std::size_t c = col + 1; c < nc; ++c) {
        a[r][c] = a[rk][col] * a[r][c] - a[r][col] * a[rk][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rk][col];
    ++rk;
  }
  return rk;
}

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& a = out.reduced;
  const std::size_t nr = a.rows(), nc = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = row;
    while (piv < nr && a(piv, col) == 0) ++piv;
    if (piv == nr) continue;
    a.swap_rows(piv, row);
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < nc; ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < nc; ++c)
        if (a(row, c) != 0) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

Matrix kernel(const Matrix& m) {
  const auto ech = rref(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(nc, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(nc, basis);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const auto ech = rref(hstack(m, Matrix::identity(n)));
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) {
    throw std::domain_error("matrix is singular");
  }
  return ech.reduced.block(0, n, n, n);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  const auto ech = rref(hstack(a, b));
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    const std::size_t p = ech.pivots[i];
    if (p >= n) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(p, c) = ech.reduced(i, n + c);
  }
  return x;
}

Matrix complete_basis(const Matrix& basis) {
  const std::size_t n = basis.rows();
  const std::size_t k = basis.cols();
  if (rank(basis) != k) throw std::domain_error("complete_basis: dependent columns");
  Matrix out(n, n);
  out.set_block(0, 0, basis);
  // Unit vectors e_j are added for the non-pivot rows of the basis' transposed echelon form.
  const auto ech = rref(basis.transpose());
  std::vector<bool> used(n, false);
  for (auto p : ech.pivots) used[p] = true;
  std::size_t next = k;
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    out(j, next++) = 1;
  }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

}  // namespace scrollacm
