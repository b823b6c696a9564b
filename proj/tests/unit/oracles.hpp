#pragma once
// Independent reference computations used by several test files. None of
// these call into the code paths they are compared against.

#include "scrollacm/matrix.hpp"
#include "scrollacm/surface.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using scrollacm::Integer;
using scrollacm::Rational;

/// h0 of O(aH + bF) on S(theta, theta+eps) by counting lattice points of the
/// toric polygon: with H = D_neg + (theta+eps)F, the sections are monomials
/// (x, y), -a <= y <= 0, -c <= x <= eps*y, c = a(theta+eps) + b.
inline std::int64_t h0_lattice(std::int64_t theta, std::int64_t eps, std::int64_t a, std::int64_t b) {
  if (a < 0) return 0;
  const std::int64_t c = a * (theta + eps) + b;
  std::int64_t n = 0;
  for (std::int64_t y = -a; y <= 0; ++y)
    for (std::int64_t x = -c; x <= eps * y; ++x) ++n;
  return n;
}

/// chi(O(D)) = 1 + D.(D - K)/2 with H^2 = dX, HF = 1, F^2 = 0, K = -2H + (dX-2)F.
inline std::int64_t chi_rr(std::int64_t dX, std::int64_t a, std::int64_t b) {
  const std::int64_t ka = -2, kb = dX - 2;
  const std::int64_t da = a - ka, db = b - kb;
  const std::int64_t dot = a * da * dX + a * db + b * da;
  return 1 + dot / 2;
}

/// Determinant by cofactor expansion; small matrices only.
inline Rational det_cofactor(const scrollacm::Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    scrollacm::Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    const Rational term = m(0, c) * det_cofactor(minor);
    total += (c % 2 ? -term : term);
  }
  return total;
}

/// phi_{w,k} for k >= 0 straight from the recurrence, as a table.
inline std::vector<Integer> fib_table(std::int64_t w, std::size_t n) {
  std::vector<Integer> t{0, 1};
  while (t.size() < n) t.push_back(w * t[t.size() - 1] - t[t.size() - 2]);
  t.resize(n);
  return t;
}

}  // namespace oracle
