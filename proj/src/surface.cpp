#include "scrollacm/surface.hpp"

#include "scrollacm/errors.hpp"

#include <algorithm>

namespace scrollacm {

Scroll::Scroll(std::int64_t theta, std::int64_t epsilon) : theta_(theta), epsilon_(epsilon) {
  // theta = 0 would be a cone; we only handle smooth scrolls.
  if (theta < 1) throw InvalidScroll("scroll needs theta >= 1 (got " + std::to_string(theta) + ")");
  if (epsilon < 0) throw InvalidScroll("scroll needs epsilon >= 0 (got " + std::to_string(epsilon) + ")");
  if (dX() < 3) throw InvalidScroll("scroll degree 2*theta+epsilon must be at least 3");
}

Scroll Scroll::from_degrees(std::int64_t a, std::int64_t b) {
  if (a > b) std::swap(a, b);
  return Scroll(a, b - a);
}

std::string Scroll::name() const {
  return "S(" + std::to_string(theta_) + "," + std::to_string(theta_ + epsilon_) + ")";
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  alpha += o.alpha;
  beta += o.beta;
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  alpha -= o.alpha;
  beta -= o.beta;
  return *this;
}

namespace {

std::string term(const Integer& c, const char* sym, bool first) {
  std::string out;
  if (c < 0) out += "-";
  else if (!first) out += "+";
  Integer mag = abs(c);
  if (mag != 1) out += mag.get_str();
  out += sym;
  return out;
}

}  // namespace

std::string DivisorClass::to_string() const {
  if (alpha == 0 && beta == 0) return "0";
  std::string out;
  if (alpha != 0) out += term(alpha, "H", true);
  if (beta != 0) out += term(beta, "F", out.empty());
  return out;
}

Integer intersect(const Scroll& s, const DivisorClass& d1, const DivisorClass& d2) {
  return d1.alpha * d2.alpha * s.dX() + d1.alpha * d2.beta + d2.alpha * d1.beta;
}

DivisorClass canonical_class(const Scroll& s) { return {-2, s.dX() - 2}; }

DivisorClass line_bundle_L(const Scroll& s) { return {-1, s.dX() - 1}; }

DivisorClass negative_section(const Scroll& s) {
  if (s.epsilon() == 0) throw DomainError("negative section only exists for epsilon > 0");
  return {1, -(s.theta() + s.epsilon())};
}

namespace {

// alpha >= 0: O(alpha H + beta F) pushes forward to sum_{i=0..alpha} O(alpha*theta + i*eps + beta)
// on P^1. Summand i contributes max(m_i, 0) to h0 and max(-m_i, 0) to h1 with
// m_i = alpha*theta + i*eps + beta + 1.
Cohomology cohomology_effective_side(const Scroll& s, const Integer& alpha, const Integer& beta) {
  const Integer c = alpha * s.theta() + beta + 1;  // m_0
  const Integer eps = s.epsilon();
  const Integer n = alpha + 1;
  const Integer total = n * c + eps * alpha * (alpha + 1) / 2;  // sum of all m_i
  Integer h0 = 0;
  if (eps == 0) {
    if (c > 0) h0 = n * c;
  } else {
    // first index with m_i > 0
    Integer i0 = c > 0 ? Integer(0) : floor_div(-c, eps) + 1;
    if (i0 <= alpha) {
      const Integer count = alpha - i0 + 1;
      h0 = count * c + eps * (alpha * (alpha + 1) / 2 - (i0 - 1) * i0 / 2);
    }
  }
  return {h0, h0 - total, 0};
}

}  // namespace

Cohomology cohomology(const Scroll& s, const DivisorClass& d) {
  if (d.alpha >= 0) return cohomology_effective_side(s, d.alpha, d.beta);
  if (d.alpha == -1) return {0, 0, 0};
  // Serre duality: h^k(D) = h^{2-k}(omega - D), and omega - D has alpha >= 0.
  const DivisorClass dual = canonical_class(s) - d;
  const Cohomology c = cohomology_effective_side(s, dual.alpha, dual.beta);
  return {c.h2, c.h1, c.h0};
}

Integer initialized_twist(const Scroll& s, const DivisorClass& d) {
  // h0(a H + b F) > 0 iff a >= 0 and the top summand a(theta+eps) + b + 1 is positive.
  // Every class has such a twist, so NoInitializedTwist cannot arise for line bundles.
  Integer a = ceil_div(-d.beta, s.theta() + s.epsilon());
  if (a < 0) a = 0;
  return a - d.alpha;
}

bool is_acm_line_bundle(const Scroll& s, const DivisorClass& d) {
  // Scan the total H-coefficient a = alpha + t. For a >= 0, h1 needs
  // a*theta + beta + 1 < 0, hence a < |beta|. For a <= -2, duality gives
  // a' = -2 - a >= 0 and beta' = dX - 2 - beta, so h1 needs a' < |beta| + dX,
  // i.e. a > -|beta| - dX - 2. a = -1 never contributes. Outside the window
  // below h1 vanishes identically.
  const Integer bound = abs(d.beta) + s.dX() + 2;
  for (Integer a = -bound; a <= bound; ++a) {
    if (cohomology(s, {a, d.beta}).h1 != 0) return false;
  }
  return true;
}

std::vector<AcmLineBundle> classify_acm_line_bundles(const Scroll& s) {
  std::vector<AcmLineBundle> out;
  for (std::int64_t l = 0; l <= s.dX() - 1; ++l) out.push_back({{0, l}, l == s.dX() - 1});
  out.push_back({{1, -1}, true});
  return out;
}

}  // namespace scrollacm
