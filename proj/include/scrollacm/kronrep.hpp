#pragma once

#include "scrollacm/chern.hpp"
#include "scrollacm/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace scrollacm {

/// Dimension vector (b, a) of a Kronecker representation: b at the source, a at the target.
struct DimensionVector {
  Integer b = 0;
  Integer a = 0;
  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
};

/// w linear maps of shape a x b.
class QuiverRep {
 public:
  /// Throws ShapeMismatch if the maps disagree in shape, DomainError if there are none.
  explicit QuiverRep(std::vector<Matrix> maps);
  std::size_t w() const { return maps_.size(); }
  DimensionVector dims() const;
  const std::vector<Matrix>& maps() const { return maps_; }

 private:
  std::vector<Matrix> maps_;
};

/// phi_{w,-1} = 0, phi_{w,0} = 0, phi_{w,1} = 1, phi_{w,k+1} = w phi_{w,k} - phi_{w,k-1}.
/// Throws DomainError for k < -1 or w < 2.
Integer fibonacci(std::int64_t w, std::int64_t k);

/// w a b - a^2 - b^2 + 1
Integer psi(const Integer& w, const Integer& a, const Integer& b);

/// k >= 0 with {a, b} = {phi_{w,k}, phi_{w,k+1}}, found by running the
/// recurrence backwards; empty when the descent fails. Throws DomainError
/// if a or b is negative or both vanish.
std::optional<std::int64_t> rigid_dimension_test(std::int64_t w, const Integer& a, const Integer& b);

/// Character of an extension 0 -> O(-F)^a -> E -> L^b -> 0. Needs dX >= 4.
ChernCharacter ulrich_character(const Scroll& s, const DimensionVector& dims);

}  // namespace scrollacm
