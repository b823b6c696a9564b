#pragma once

#include "scrollacm/chern.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace scrollacm {

enum class Family { UlrichU, RigidF, RigidH, LineBundle, SporadicV, SporadicW, FamilyMember };

/// Stable tag used in tables and JSON.
std::string family_tag(Family f);

/// Non-split extension 0 -> O(sub) -> E -> O(quotient) -> 0; its existence is
/// certified by h1(certificate) = ext^1(O(quotient), O(sub)).
struct ExtensionData {
  DivisorClass sub;
  DivisorClass quotient;
  DivisorClass certificate;
  Integer h1;
};

struct BundleDescriptor {
  Family family = Family::LineBundle;
  std::string name;  // "U_2", "F(-3,2,-2)", "O(H-F)", ...
  ChernCharacter character;
  Rational slope;
  std::optional<Integer> a;  // exponent of O(-F)
  std::optional<Integer> b;  // exponent of L
  bool rigid = true;
  bool exceptional = true;
  bool ulrich = false;
  std::vector<std::int64_t> word;
  std::optional<std::string> point;  // family members only
  std::optional<ExtensionData> extension;

  const Integer& rank() const { return character.rank; }
  const DivisorClass& c1() const { return character.c1; }

  friend bool operator==(const BundleDescriptor& x, const BundleDescriptor& y);
};

/// Fills slope from the character; throws ZeroRank on rank 0.
BundleDescriptor make_descriptor(const Scroll& s, Family family, std::string name, const ChernCharacter& ch);

}  // namespace scrollacm
