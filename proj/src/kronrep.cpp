#include "scrollacm/kronrep.hpp"

#include "scrollacm/errors.hpp"

#include <utility>

namespace scrollacm {

QuiverRep::QuiverRep(std::vector<Matrix> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) throw DomainError("a Kronecker representation needs at least one arrow");
  for (const auto& m : maps_) {
    if (m.rows() != maps_[0].rows() || m.cols() != maps_[0].cols())
      throw ShapeMismatch("Kronecker representation maps differ in shape");
  }
}

DimensionVector QuiverRep::dims() const {
  return {static_cast<unsigned long>(maps_[0].cols()), static_cast<unsigned long>(maps_[0].rows())};
}

Integer fibonacci(std::int64_t w, std::int64_t k) {
  if (w < 2) throw DomainError("fibonacci needs w >= 2 (got " + std::to_string(w) + ")");
  if (k < -1) throw DomainError("fibonacci index must be >= -1 (got " + std::to_string(k) + ")");
  if (k <= 0) return 0;  // phi_{w,-1} is set to 0 by convention, not by the recurrence
  Integer prev = 0, cur = 1;
  for (std::int64_t i = 1; i < k; ++i) {
    Integer next = w * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer psi(const Integer& w, const Integer& a, const Integer& b) { return w * a * b - a * a - b * b + 1; }

std::optional<std::int64_t> rigid_dimension_test(std::int64_t w, const Integer& a, const Integer& b) {
  if (a < 0 || b < 0) throw DomainError("dimension vector entries must be nonnegative");
  if (a == 0 && b == 0) throw DomainError("dimension vector must be nonzero");
  if (psi(w, a, b) != 0) return std::nullopt;
  Integer lo = a < b ? a : b;
  Integer hi = a < b ? b : a;
  std::int64_t k = 0;
  // (phi_k, phi_{k+1}) -> (phi_{k-1}, phi_k) since w phi_k - phi_{k+1} = phi_{k-1}
  while (!(lo == 0 && hi == 1)) {
    Integer next = w * lo - hi;
    if (next < 0 || next >= lo) return std::nullopt;
    hi = std::move(lo);
    lo = std::move(next);
    ++k;
  }
  return k;
}

ChernCharacter ulrich_character(const Scroll& s, const DimensionVector& dims) {
  if (s.dX() < 4) throw DomainError("Ulrich extension data needs dX >= 4");
  if (dims.a < 0 || dims.b < 0) throw DomainError("dimension vector entries must be nonnegative");
  return ch_sum(ch_scale(dims.a, ch_line(s, -DivisorClass::F())), ch_scale(dims.b, ch_line(s, line_bundle_L(s))));
}

}  // namespace scrollacm
