#include "scrollacm/descriptor.hpp"

namespace scrollacm {

std::string family_tag(Family f) {
  switch (f) {
    case Family::UlrichU: return "ulrich-U";
    case Family::RigidF: return "F";
    case Family::RigidH: return "H";
    case Family::LineBundle: return "line-bundle";
    case Family::SporadicV: return "sporadic-V";
    case Family::SporadicW: return "sporadic-W";
    case Family::FamilyMember: return "family-member-at-point";
  }
  return "unknown";
}

bool operator==(const BundleDescriptor& x, const BundleDescriptor& y) {
  auto same_ext = [](const std::optional<ExtensionData>& p, const std::optional<ExtensionData>& q) {
    if (p.has_value() != q.has_value()) return false;
    if (!p) return true;
    return p->sub == q->sub && p->quotient == q->quotient && p->certificate == q->certificate && p->h1 == q->h1;
  };
  return x.family == y.family && x.name == y.name && x.character == y.character && x.slope == y.slope &&
         x.a == y.a && x.b == y.b && x.rigid == y.rigid && x.exceptional == y.exceptional &&
         x.ulrich == y.ulrich && x.word == y.word && x.point == y.point && same_ext(x.extension, y.extension);
}

BundleDescriptor make_descriptor(const Scroll& s, Family family, std::string name, const ChernCharacter& ch) {
  BundleDescriptor d;
  d.family = family;
  d.name = std::move(name);
  d.character = ch;
  d.slope = canonical_slope(s, ch);
  return d;
}

}  // namespace scrollacm
