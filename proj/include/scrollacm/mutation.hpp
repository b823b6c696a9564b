#pragma once

#include "scrollacm/descriptor.hpp"
#include "scrollacm/kronrep.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scrollacm {

/// (v1, v2, v3) = (chi(s2,s3), chi(s1,s3), chi(s1,s2)).
struct TriVector {
  Integer v1 = 0, v2 = 0, v3 = 0;
  friend bool operator==(const TriVector&, const TriVector&) = default;
  std::string to_string() const;
};

enum class Generator { Sigma1, Sigma2, Sigma1Inv, Sigma2Inv };

/// Word k = (k1, ..., ks) standing for sigma1^k1 sigma2^k2 sigma1^k3 ...
/// Construction normalizes: a zero entry past the first merges its two
/// neighbours (sigma_i^a sigma_j^0 sigma_i^b = sigma_i^(a+b)); a trailing zero
/// past the first is dropped. k1 = 0 is kept.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<std::int64_t> k);

  const std::vector<std::int64_t>& k() const { return k_; }
  std::size_t size() const { return k_.size(); }
  bool empty() const { return k_.empty(); }
  std::int64_t operator[](std::size_t i) const { return k_[i]; }

  /// First t entries.
  BraidWord truncated(std::size_t t) const;
  BraidWord negated() const;
  std::string to_string() const;  // "(-3,2,-2)"

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<std::int64_t> k_;
};

TriVector act(Generator g, const TriVector& v);
/// k1 powers of sigma1, then k2 of sigma2, and so on, left to right.
TriVector act_word(const BraidWord& k, const TriVector& v);

/// (2, dX-4, dX-2)
TriVector base_vector(const Scroll& s);

struct KfrakResult {
  bool member;
  std::optional<int> failing_t;
};

/// For t = 2..s: (-1)^t k_{t-1} (v^{k(t-1)})_i <= 0 with i = 1 for t even and
/// i = 3 for t odd, v^{k(t-1)} the vector after the first t-1 entries.
KfrakResult kfrak_member(const Scroll& s, const BraidWord& k);

/// One entry of a collection: the underlying bundle |s| and whether s = |s|[-1].
struct CollectionObject {
  ChernCharacter bundle;
  bool shifted = false;

  /// Character of s itself (negated when shifted).
  ChernCharacter signed_character() const;
};

enum class StepPosition { Odd, Even };

class CollectionState {
 public:
  /// B_empty = (L[-1], O(-F), O).
  static CollectionState initial(const Scroll& s);

  const Scroll& scroll() const { return scroll_; }
  const std::array<CollectionObject, 3>& objects() const { return objects_; }
  const BraidWord& word() const { return word_; }
  const TriVector& tracked() const { return tracked_; }

  /// TriVector recomputed from the signed characters.
  TriVector recomputed() const;
  /// Whether the shift flags follow the pattern predicted from the last
  /// entry's sign (all shifted, s1 only, s1 and s2, or none). Informational:
  /// words whose pairs have |chi| <= 1 can break the pattern.
  bool shift_pattern_matches() const;

  /// Position of the next step (odd t mutates (s1,s2) via sigma1, even t mutates (s2,s3)).
  StepPosition next_position() const;

 private:
  friend CollectionState mutate_collection(const CollectionState&, std::int64_t, StepPosition);
  CollectionState(Scroll s, std::array<CollectionObject, 3> objs, BraidWord w, TriVector v)
      : scroll_(s), objects_(std::move(objs)), word_(std::move(w)), tracked_(v) {}

  Scroll scroll_;
  std::array<CollectionObject, 3> objects_;
  BraidWord word_;
  TriVector tracked_;
};

/// Applies sigma1^next_k (odd) or sigma2^next_k (even) to the collection.
/// The pair being mutated must be irregular: chi(|A|,|B|) < 0 and, after at
/// least one step, the strict sign condition on the previous entry. Throws
/// NotIrregular otherwise, std::invalid_argument when the position does not
/// match the word length or next_k = 0 past the first step, and
/// InconsistentState if the tracked TriVector drifts from the pairings.
CollectionState mutate_collection(const CollectionState& state, std::int64_t next_k, StepPosition position);

/// Runs the whole word from B_empty.
CollectionState run_word(const Scroll& s, const BraidWord& k);

/// F_k, the middle object of B_k. Needs dX >= 5 (DomainError) and k in the
/// admissible set (NotInKfrak). Single-entry words give U_{k1+1}.
BundleDescriptor rigid_bundle(const Scroll& s, const BraidWord& k);

/// U_k: a = phi_k, b = phi_{k-1} for k >= 1; a = phi_{-k}, b = phi_{1-k} for k <= 0.
BundleDescriptor ulrich_exceptional(const Scroll& s, std::int64_t k);

/// H_k with H_k(-H) = F_{-k}^* (x) omega.
BundleDescriptor h_bundle(const Scroll& s, const BraidWord& k);

/// ch(U_k(-H)) == ch(U_{1-k}^* (x) omega)
bool duality_check(const Scroll& s, std::int64_t k);

struct SplitMultiplicities {
  std::size_t G = 0, A = 0, B = 0;
  friend bool operator==(const SplitMultiplicities&, const SplitMultiplicities&) = default;
};
/// Extension of B^d by A^c with class eta splits as G^r + A^(c-r) + B^(d-r), r = rank eta.
SplitMultiplicities split_rigid_extension(std::size_t c, std::size_t d, const Matrix& eta);

struct EnumerationOptions {
  std::size_t max_len = 1;
  std::int64_t max_abs_k = 3;
  std::optional<Integer> max_rank;  // filters what is emitted, not what is explored
};

struct EnumerationStats {
  std::size_t words_visited = 0;
  std::size_t degenerate_words = 0;  // admissible but with a non-irregular pair
  std::size_t steps_checked = 0;     // tracked/recomputed agreements verified
};

/// Depth-first over admissible words, deduplicated on (rank, c1). Empty for dX < 5.
std::vector<BundleDescriptor> enumerate_rigid(const Scroll& s, const EnumerationOptions& opts,
                                              EnumerationStats* stats = nullptr);

}  // namespace scrollacm
