#pragma once

#include "scrollacm/arith.hpp"
#include "scrollacm/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace scrollacm {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// t - root
  static Polynomial linear_root(const Rational& root) { return Polynomial({-root, Rational(1)}); }
  static Polynomial monomial(std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational evaluate(const Rational& t) const;
  /// p(m) for a square matrix m, by Horner's rule.
  Matrix evaluate(const Matrix& m) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned n) const;

  /// Total order used for canonical sorting: by degree, then coefficients from the top.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct IrreducibleFactor {
  Polynomial factor;   // monic, irreducible over Q
  unsigned multiplicity;
};

/// Factorization of a nonzero polynomial into monic irreducibles over Q, sorted
/// with operator<. Squarefree parts are split by rational roots and then by
/// Kronecker's interpolation method.
std::vector<IrreducibleFactor> factor(const Polynomial& p);

/// Characteristic polynomial det(t*I - m) via the Faddeev-LeVerrier recurrence.
Polynomial characteristic_polynomial(const Matrix& m);

}  // namespace scrollacm
