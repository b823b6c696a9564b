#include "scrollacm/mutation.hpp"

#include "scrollacm/errors.hpp"

#include <map>
#include <stdexcept>

namespace scrollacm {

std::string TriVector::to_string() const {
  return "(" + v1.get_str() + "," + v2.get_str() + "," + v3.get_str() + ")";
}

BraidWord::BraidWord(std::vector<std::int64_t> k) : k_(std::move(k)) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i < k_.size(); ++i) {
      if (k_[i] != 0) continue;
      if (i + 1 < k_.size()) {
        k_[i - 1] += k_[i + 1];
        k_.erase(k_.begin() + static_cast<long>(i), k_.begin() + static_cast<long>(i) + 2);
      } else {
        k_.pop_back();
      }
      changed = true;
      break;
    }
  }
}

BraidWord BraidWord::truncated(std::size_t t) const {
  BraidWord w;
  w.k_.assign(k_.begin(), k_.begin() + static_cast<long>(std::min(t, k_.size())));
  return w;
}

BraidWord BraidWord::negated() const {
  BraidWord w = *this;
  for (auto& x : w.k_) x = -x;
  return w;
}

std::string BraidWord::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < k_.size(); ++i) out += (i ? "," : "") + std::to_string(k_[i]);
  return out + ")";
}

TriVector act(Generator g, const TriVector& v) {
  switch (g) {
    case Generator::Sigma1: return {v.v1 * v.v3 - v.v2, v.v1, v.v3};
    case Generator::Sigma2: return {v.v1, v.v1 * v.v2 - v.v3, v.v2};
    case Generator::Sigma1Inv: return {v.v2, v.v2 * v.v3 - v.v1, v.v3};
    case Generator::Sigma2Inv: return {v.v1, v.v3, v.v1 * v.v3 - v.v2};
  }
  return v;
}

namespace {

Generator generator_for(std::size_t index, std::int64_t k) {
  const bool first = index % 2 == 0;
  if (k >= 0) return first ? Generator::Sigma1 : Generator::Sigma2;
  return first ? Generator::Sigma1Inv : Generator::Sigma2Inv;
}

TriVector act_power(std::size_t index, std::int64_t k, TriVector v) {
  const Generator g = generator_for(index, k);
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) v = act(g, v);
  return v;
}

// phi for an arbitrary (possibly negative or small) w, extended in both
// directions. Only used to write mutations in closed form.
Integer phi_any(const Integer& w, std::int64_t j) {
  Integer prev = 0, cur = 1;  // phi_0, phi_1
  if (j == 0) return prev;
  if (j > 0) {
    for (std::int64_t i = 1; i < j; ++i) {
      Integer next = w * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // walk down: phi_{i-1} = w phi_i - phi_{i+1}
  Integer hi = 1, lo = 0;  // phi_1, phi_0
  for (std::int64_t i = 0; i > j; --i) {
    Integer next = w * lo - hi;
    hi = std::move(lo);
    lo = std::move(next);
  }
  return lo;
}

// g_j for the pair (A, B) with w = chi(A, B): g_0 = A, g_1 = B, g_{j+1} = w g_j - g_{j-1}.
ChernCharacter pair_term(const Integer& w, const ChernCharacter& a, const ChernCharacter& b, std::int64_t j) {
  if (j >= 1) return ch_sum(ch_scale(phi_any(w, j), b), ch_scale(-phi_any(w, j - 1), a));
  return ch_sum(ch_scale(-phi_any(w, -j), b), ch_scale(phi_any(w, 1 - j), a));
}

CollectionObject to_object(const ChernCharacter& signed_ch) {
  if (signed_ch.rank == 0) throw InconsistentState("mutation produced a rank zero object");
  if (signed_ch.rank < 0) return {ch_shift(signed_ch), true};
  return {signed_ch, false};
}

}  // namespace

TriVector act_word(const BraidWord& k, const TriVector& v) {
  TriVector out = v;
  for (std::size_t i = 0; i < k.size(); ++i) out = act_power(i, k[i], out);
  return out;
}

TriVector base_vector(const Scroll& s) { return {2, s.dX() - 4, s.dX() - 2}; }

KfrakResult kfrak_member(const Scroll& s, const BraidWord& k) {
  TriVector v = base_vector(s);
  for (std::size_t t = 2; t <= k.size(); ++t) {
    v = act_power(t - 2, k[t - 2], v);  // v after the first t-1 entries
    const Integer& comp = t % 2 == 0 ? v.v1 : v.v3;
    Integer value = k[t - 2] * comp;
    if (t % 2 == 1) value = -value;
    if (value > 0) return {false, static_cast<int>(t)};
  }
  return {true, std::nullopt};
}

ChernCharacter CollectionObject::signed_character() const { return shifted ? ch_shift(bundle) : bundle; }

CollectionState CollectionState::initial(const Scroll& s) {
  std::array<CollectionObject, 3> objs{
      CollectionObject{ch_line(s, line_bundle_L(s)), true},
      CollectionObject{ch_line(s, -DivisorClass::F()), false},
      CollectionObject{ch_line(s, DivisorClass()), false},
  };
  return CollectionState(s, objs, BraidWord(), base_vector(s));
}

TriVector CollectionState::recomputed() const {
  const auto c1 = objects_[0].signed_character();
  const auto c2 = objects_[1].signed_character();
  const auto c3 = objects_[2].signed_character();
  return {euler_pairing(scroll_, c2, c3), euler_pairing(scroll_, c1, c3), euler_pairing(scroll_, c1, c2)};
}

StepPosition CollectionState::next_position() const {
  return word_.size() % 2 == 0 ? StepPosition::Odd : StepPosition::Even;
}

bool CollectionState::shift_pattern_matches() const {
  std::array<bool, 3> expected{true, false, false};
  const std::size_t s = word_.size();
  if (s > 0 && word_[s - 1] != 0) {
    const bool neg = word_[s - 1] < 0;
    if (s % 2 == 0) expected = neg ? std::array<bool, 3>{true, true, true} : std::array<bool, 3>{true, false, false};
    else expected = neg ? std::array<bool, 3>{true, true, false} : std::array<bool, 3>{false, false, false};
  }
  for (std::size_t i = 0; i < 3; ++i)
    if (objects_[i].shifted != expected[i]) return false;
  return true;
}

CollectionState mutate_collection(const CollectionState& state, std::int64_t next_k, StepPosition position) {
  const std::size_t s = state.word_.size();
  if (position != state.next_position())
    throw std::invalid_argument("step position does not match the length of the word " + state.word_.to_string());
  if (next_k == 0 && s > 0) throw std::invalid_argument("braid word entries past the first must be nonzero");

  const std::size_t ia = position == StepPosition::Odd ? 0 : 1;
  const CollectionObject& pa = state.objects_[ia];
  const CollectionObject& pb = state.objects_[ia + 1];
  const TriVector& v = state.tracked_;
  const Scroll& sc = state.scroll_;

  // the pair must be irregular: only Ext^1 between the underlying bundles
  const Integer chi_abs = euler_pairing(sc, pa.bundle, pb.bundle);
  bool irregular = chi_abs < 0;
  if (s > 0) {
    const Integer last = state.word_[s - 1];
    irregular = irregular && (s % 2 == 0 ? last * v.v3 > 0 : last * v.v1 < 0);
  }
  if (!irregular) {
    throw NotIrregular("pair (s" + std::to_string(ia + 1) + ",s" + std::to_string(ia + 2) + ") of B" +
                       state.word_.to_string() + " is not irregular");
  }

  const Integer w = position == StepPosition::Odd ? v.v3 : v.v1;
  const ChernCharacter a = pa.signed_character();
  const ChernCharacter b = pb.signed_character();
  std::array<CollectionObject, 3> objs = state.objects_;
  objs[ia] = to_object(pair_term(w, a, b, next_k));
  objs[ia + 1] = to_object(pair_term(w, a, b, next_k + 1));

  std::vector<std::int64_t> k = state.word_.k();
  k.push_back(next_k);
  CollectionState out(sc, objs, BraidWord(k), act_power(s, next_k, v));
  if (out.recomputed() != out.tracked_) {
    throw InconsistentState("tracked " + out.tracked_.to_string() + " but pairings give " +
                            out.recomputed().to_string() + " after " + out.word_.to_string());
  }
  return out;
}

CollectionState run_word(const Scroll& s, const BraidWord& k) {
  CollectionState st = CollectionState::initial(s);
  for (std::size_t i = 0; i < k.size(); ++i) st = mutate_collection(st, k[i], st.next_position());
  return st;
}

namespace {

BundleDescriptor descriptor_from_state(const CollectionState& st) {
  const Scroll& s = st.scroll();
  const ChernCharacter& mid = st.objects()[1].bundle;
  if (euler_pairing(s, mid, mid) != 1)
    throw InconsistentState("middle object of B" + st.word().to_string() + " has chi(E,E) != 1");
  if (st.word().size() == 1) {
    BundleDescriptor d = ulrich_exceptional(s, st.word()[0] + 1);
    if (d.character != mid) throw InconsistentState("single-step mutation disagrees with the Ulrich data");
    return d;
  }
  BundleDescriptor d = make_descriptor(s, Family::RigidF, "F" + st.word().to_string(), mid);
  d.word = st.word().k();
  return d;
}

void require_wild(const Scroll& s) {
  if (s.dX() < 5) throw DomainError("rigid bundles from braid words need dX >= 5 (" + s.name() + " is tame)");
}

}  // namespace

BundleDescriptor rigid_bundle(const Scroll& s, const BraidWord& k) {
  require_wild(s);
  if (k.empty()) throw std::invalid_argument("rigid_bundle needs a nonempty word");
  const auto member = kfrak_member(s, k);
  if (!member.member) {
    throw NotInKfrak("word " + k.to_string() + " is not admissible (fails at t=" +
                         std::to_string(*member.failing_t) + ")",
                     *member.failing_t);
  }
  return descriptor_from_state(run_word(s, k));
}

BundleDescriptor ulrich_exceptional(const Scroll& s, std::int64_t k) {
  if (s.dX() < 4) throw DomainError("Ulrich exceptional bundles need dX >= 4");
  const std::int64_t w = s.w();
  const Integer a = k >= 1 ? fibonacci(w, k) : fibonacci(w, -k);
  const Integer b = k >= 1 ? fibonacci(w, k - 1) : fibonacci(w, 1 - k);
  BundleDescriptor d = make_descriptor(s, Family::UlrichU, "U_" + std::to_string(k), ulrich_character(s, {b, a}));
  d.a = a;
  d.b = b;
  d.ulrich = true;
  d.word = {k - 1};
  return d;
}

BundleDescriptor h_bundle(const Scroll& s, const BraidWord& k) {
  const BundleDescriptor f = rigid_bundle(s, k.negated());
  const ChernCharacter ch =
      ch_twist(s, ch_twist(s, ch_dual(f.character), canonical_class(s)), DivisorClass::H());
  BundleDescriptor d = make_descriptor(s, Family::RigidH, "H" + k.to_string(), ch);
  d.word = k.k();
  return d;
}

bool duality_check(const Scroll& s, std::int64_t k) {
  const ChernCharacter lhs = ch_twist(s, ulrich_exceptional(s, k).character, -DivisorClass::H());
  const ChernCharacter rhs = ch_twist(s, ch_dual(ulrich_exceptional(s, 1 - k).character), canonical_class(s));
  return lhs == rhs;
}

SplitMultiplicities split_rigid_extension(std::size_t c, std::size_t d, const Matrix& eta) {
  if (eta.rows() != c || eta.cols() != d) throw ShapeMismatch("extension class must be a c x d matrix");
  const std::size_t r = rank(eta);
  return {r, c - r, d - r};
}

std::vector<BundleDescriptor> enumerate_rigid(const Scroll& s, const EnumerationOptions& opts,
                                              EnumerationStats* stats) {
  std::vector<BundleDescriptor> out;
  if (s.dX() < 5 || opts.max_len == 0) return out;
  EnumerationStats local;
  EnumerationStats& st = stats ? *stats : local;
  std::map<std::pair<Integer, DivisorClass>, bool> seen;

  auto emit = [&](const CollectionState& state) {
    BundleDescriptor d = descriptor_from_state(state);
    if (opts.max_rank && d.rank() > *opts.max_rank) return;
    auto key = std::make_pair(d.rank(), d.c1());
    if (seen.emplace(key, true).second) out.push_back(std::move(d));
  };

  auto visit = [&](auto&& self, const CollectionState& state) -> void {
    ++st.words_visited;
    st.steps_checked += state.word().size();
    emit(state);
    if (state.word().size() >= opts.max_len || state.word()[0] == 0) return;
    for (std::int64_t k = -opts.max_abs_k; k <= opts.max_abs_k; ++k) {
      if (k == 0) continue;
      std::vector<std::int64_t> next = state.word().k();
      next.push_back(k);
      if (!kfrak_member(s, BraidWord(next)).member) continue;
      try {
        self(self, mutate_collection(state, k, state.next_position()));
      } catch (const NotIrregular&) {
        ++st.degenerate_words;
      }
    }
  };

  const CollectionState root = CollectionState::initial(s);
  for (std::int64_t k = -opts.max_abs_k; k <= opts.max_abs_k; ++k) visit(visit, mutate_collection(root, k, StepPosition::Odd));
  return out;
}

}  // namespace scrollacm
