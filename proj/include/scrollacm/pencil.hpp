#pragma once

#include "scrollacm/matrix.hpp"
#include "scrollacm/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scrollacm {

/// x*M1 + y*M2 with a x b rational matrices.
class MatrixPencil {
 public:
  MatrixPencil() = default;
  /// Throws ShapeMismatch if the shapes differ.
  MatrixPencil(Matrix m1, Matrix m2);
  static MatrixPencil zero(std::size_t rows, std::size_t cols) { return {Matrix(rows, cols), Matrix(rows, cols)}; }

  std::size_t rows() const { return m1_.rows(); }
  std::size_t cols() const { return m1_.cols(); }
  const Matrix& M1() const { return m1_; }
  const Matrix& M2() const { return m2_; }

  /// x*M1 + y*M2 at a point.
  Matrix at(const Rational& x, const Rational& y) const;
  MatrixPencil transpose() const { return {m1_.transpose(), m2_.transpose()}; }
  /// P * M * Q
  MatrixPencil transformed(const Matrix& p, const Matrix& q) const { return {p * m1_ * q, p * m2_ * q}; }

  friend bool operator==(const MatrixPencil& a, const MatrixPencil& b) { return a.m1_ == b.m1_ && a.m2_ == b.m2_; }
  std::string to_string() const;

 private:
  Matrix m1_, m2_;
};

enum class BlockKind { C, B, J, Companion, Zero };

/// One Kronecker-Weierstrass block type with a multiplicity.
///   C(u):  (u+1) x u,  x[I;0] + y[0;I]
///   B(v):  v x (v+1),  x[I 0] + y[0 I]
///   J(u,n):   x I + y J_{u,n}  (u on the diagonal, ones above); vanishes at (-u:1)
///   J(inf,n): y I + x N        (N nilpotent with ones above the diagonal)
///   Companion(p,n): x I + y Comp(p^n), p irreducible of degree >= 2
///   Zero(a0,b0): a0 zero rows and b0 zero columns
struct KWBlock {
  BlockKind kind = BlockKind::Zero;
  std::size_t size = 0;           // u, v or n
  std::optional<Rational> point;  // J only; empty means infinity
  Polynomial poly;                // Companion only
  std::size_t a0 = 0, b0 = 0;     // Zero only
  std::size_t multiplicity = 1;

  static KWBlock C(std::size_t u, std::size_t mult = 1);
  static KWBlock B(std::size_t v, std::size_t mult = 1);
  static KWBlock J(const Rational& u, std::size_t n, std::size_t mult = 1);
  static KWBlock J_infinity(std::size_t n, std::size_t mult = 1);
  static KWBlock Companion(const Polynomial& p, std::size_t n, std::size_t mult = 1);
  static KWBlock Zero(std::size_t a0, std::size_t b0);

  /// Shape of a single copy.
  std::size_t rows() const;
  std::size_t cols() const;
  /// The pencil of a single copy.
  MatrixPencil pencil() const;

  std::string to_string() const;  // "B(1)", "J(2,3)", "J(inf,1)", "Comp(t^2 - 2,1)", "Zero(2,3)", with "^m" for multiplicity

  /// Same type, ignoring multiplicity.
  bool same_type(const KWBlock& o) const;
  friend bool operator==(const KWBlock& a, const KWBlock& b) { return a.same_type(b) && a.multiplicity == b.multiplicity; }
};

/// Canonical order: C ascending, B ascending, J at finite points by (u, n),
/// J at infinity by n, Companion by (p, n), Zero last.
bool canonical_less(const KWBlock& a, const KWBlock& b);

/// Sorts, merges equal types into multiplicities and collects all zero
/// rows/columns into one Zero(a0,b0) block.
std::vector<KWBlock> normalize_blocks(std::vector<KWBlock> blocks);

struct KWDecomposition {
  std::vector<KWBlock> blocks;  // normalized
  Matrix P;                     // a x a, invertible
  Matrix Q;                     // b x b, invertible
};

/// P * (x M1 + y M2) * Q == kw_assemble(blocks). Total; throws std::logic_error
/// only if an internal consistency check fails.
KWDecomposition kw_decompose(const MatrixPencil& m);

/// Block-diagonal pencil in canonical order.
MatrixPencil kw_assemble(const std::vector<KWBlock>& blocks);

/// Exact check of P M1 Q and P M2 Q against the assembled blocks (and
/// invertibility of P, Q). Throws ShapeMismatch if P or Q has the wrong shape.
bool verify_equivalence(const KWDecomposition& dec, const MatrixPencil& m);

/// Exactly one block of multiplicity one; a Zero block counts only if it is a single row or column.
bool is_indecomposable(const MatrixPencil& m);

/// Rank of x M1 + y M2 over the function field.
std::size_t normal_rank(const MatrixPencil& m);

}  // namespace scrollacm
