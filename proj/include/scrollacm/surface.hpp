#pragma once

#include "scrollacm/arith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace scrollacm {

/// The scroll S(theta, theta+epsilon), i.e. the Hirzebruch surface F_epsilon
/// embedded by H. Picard lattice ZH + ZF with H^2 = dX, H.F = 1, F^2 = 0.
class Scroll {
 public:
  /// Throws InvalidScroll unless theta >= 1, epsilon >= 0 and dX >= 3.
  Scroll(std::int64_t theta, std::int64_t epsilon);
  /// S(a, b) with a <= b, the notation used on the command line.
  static Scroll from_degrees(std::int64_t a, std::int64_t b);

  std::int64_t theta() const { return theta_; }
  std::int64_t epsilon() const { return epsilon_; }
  std::int64_t dX() const { return 2 * theta_ + epsilon_; }
  /// Arrow count of the Kronecker quiver attached to the scroll, dX - 2.
  std::int64_t w() const { return dX() - 2; }

  std::string name() const;  // "S(2,3)"
  friend bool operator==(const Scroll&, const Scroll&) = default;

 private:
  std::int64_t theta_;
  std::int64_t epsilon_;
};

/// alpha*H + beta*F.
struct DivisorClass {
  Integer alpha = 0;
  Integer beta = 0;

  DivisorClass() = default;
  DivisorClass(Integer a, Integer b) : alpha(std::move(a)), beta(std::move(b)) {}

  static DivisorClass H() { return {1, 0}; }
  static DivisorClass F() { return {0, 1}; }

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(const DivisorClass& a) { return {-a.alpha, -a.beta}; }
  friend DivisorClass operator*(const Integer& k, const DivisorClass& d) { return {k * d.alpha, k * d.beta}; }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
  }
  friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }
  /// Lexicographic on (alpha, beta); only used for ordered containers.
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) {
    return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
  }

  std::string to_string() const;  // e.g. "4F-H", "-2H+3F", "0"
};

struct Cohomology {
  Integer h0, h1, h2;
  Integer euler() const { return h0 - h1 + h2; }
  friend bool operator==(const Cohomology&, const Cohomology&) = default;
};

Integer intersect(const Scroll& s, const DivisorClass& d1, const DivisorClass& d2);

/// omega = -2H + (dX-2)F.
DivisorClass canonical_class(const Scroll& s);
/// L = (dX-1)F - H.
DivisorClass line_bundle_L(const Scroll& s);
/// Negative section H - (theta+epsilon)F. Only defined for epsilon > 0 (DomainError otherwise).
DivisorClass negative_section(const Scroll& s);

/// h^0, h^1, h^2 of O(d). Closed form; arbitrary-size coefficients are fine.
Cohomology cohomology(const Scroll& s, const DivisorClass& d);

/// Unique t0 with h0(d + t0 H) > 0 and h0(d + (t0-1) H) = 0.
Integer initialized_twist(const Scroll& s, const DivisorClass& d);

/// True iff h1(d + tH) = 0 for every integer t.
bool is_acm_line_bundle(const Scroll& s, const DivisorClass& d);

struct AcmLineBundle {
  DivisorClass cls;
  bool ulrich;
};
/// The dX+1 initialized ACM line bundles: lF for 0 <= l <= dX-1, and H-F.
std::vector<AcmLineBundle> classify_acm_line_bundles(const Scroll& s);

}  // namespace scrollacm
