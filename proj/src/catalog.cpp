#include "scrollacm/catalog.hpp"

#include "scrollacm/errors.hpp"
#include "scrollacm/kronrep.hpp"
#include "scrollacm/mutation.hpp"

namespace scrollacm {

namespace {

void require_quartic(const Scroll& s) {
  if (s.dX() != 4) throw WrongDegree(s.name() + " has degree " + std::to_string(s.dX()) + ", expected 4");
}

BundleDescriptor family_member(const Scroll& s, const KWBlock& b) {
  const Integer m = static_cast<unsigned long>(b.rows());
  BundleDescriptor d = make_descriptor(s, Family::FamilyMember, "E" + block_point(b), ulrich_character(s, {m, m}));
  d.a = m;
  d.b = m;
  d.rigid = false;
  d.exceptional = false;
  d.ulrich = true;
  d.point = block_point(b);
  return d;
}

BundleDescriptor line_descriptor(const Scroll& s, const DivisorClass& cls, bool ulrich) {
  BundleDescriptor d = make_descriptor(s, Family::LineBundle, cls == DivisorClass() ? std::string("O") : "O(" + cls.to_string() + ")", ch_line(s, cls));
  d.ulrich = ulrich;
  return d;
}

BundleDescriptor sporadic(const Scroll& s, Family fam, std::string name, const DivisorClass& sub,
                          const DivisorClass& quotient) {
  const ChernCharacter ch = ch_sum(ch_line(s, sub), ch_line(s, quotient));
  BundleDescriptor d = make_descriptor(s, fam, std::move(name), ch);
  const DivisorClass cert = sub - quotient;  // Ext^1(O(q), O(sub)) = H^1(O(sub - q))
  d.extension = ExtensionData{sub, quotient, cert, cohomology(s, cert).h1};
  d.rigid = true;
  d.exceptional = false;
  return d;
}

}  // namespace

std::string block_point(const KWBlock& b) {
  if (b.kind == BlockKind::J) return b.point ? "(" + to_string(Rational(-*b.point)) + ":1)" : std::string("(1:0)");
  if (b.kind == BlockKind::Companion) return "(-t:1)|" + b.poly.to_string('t') + "=0";
  return "";
}

std::vector<BundleDescriptor> classify_quartic_ulrich(const Scroll& s, const MatrixPencil& m) {
  require_quartic(s);
  const KWDecomposition dec = kw_decompose(m);
  std::vector<BundleDescriptor> out;
  for (const auto& b : dec.blocks) {
    std::vector<BundleDescriptor> one;
    switch (b.kind) {
      case BlockKind::C: one.push_back(ulrich_exceptional(s, static_cast<std::int64_t>(b.size) + 1)); break;
      case BlockKind::B: one.push_back(ulrich_exceptional(s, -static_cast<std::int64_t>(b.size))); break;
      case BlockKind::J:
      case BlockKind::Companion: one.push_back(family_member(s, b)); break;
      case BlockKind::Zero:
        for (std::size_t i = 0; i < b.a0; ++i) out.push_back(ulrich_exceptional(s, 1));
        for (std::size_t i = 0; i < b.b0; ++i) out.push_back(ulrich_exceptional(s, 0));
        break;
    }
    for (std::size_t i = 0; i < b.multiplicity; ++i)
      for (const auto& d : one) out.push_back(d);
  }
  return out;
}

std::vector<BundleDescriptor> quartic_acm_catalog(const Scroll& s) {
  require_quartic(s);
  std::vector<BundleDescriptor> out;
  for (const auto& lb : classify_acm_line_bundles(s)) out.push_back(line_descriptor(s, lb.cls, lb.ulrich));
  if (s.epsilon() == 2) {
    const DivisorClass L = line_bundle_L(s), F = DivisorClass::F(), H = DivisorClass::H();
    out.push_back(sporadic(s, Family::SporadicV, "V", DivisorClass(), L));
    out.push_back(sporadic(s, Family::SporadicV, "V(-F)", -F, L - F));
    out.push_back(sporadic(s, Family::SporadicW, "W", H - F, L));
  }
  return out;
}

}  // namespace scrollacm
