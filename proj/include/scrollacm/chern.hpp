#pragma once

#include "scrollacm/surface.hpp"

#include <vector>

namespace scrollacm {

/// (rank, c1, ch2) of an object. ch2 is kept doubled so it stays integral;
/// shifted objects are just negated characters at this layer.
struct ChernCharacter {
  Integer rank = 0;
  DivisorClass c1;
  Integer ch2_times2 = 0;

  Rational ch2() const { return make_rational(ch2_times2, 2); }

  friend bool operator==(const ChernCharacter& a, const ChernCharacter& b) {
    return a.rank == b.rank && a.c1 == b.c1 && a.ch2_times2 == b.ch2_times2;
  }
  friend bool operator!=(const ChernCharacter& a, const ChernCharacter& b) { return !(a == b); }
  std::string to_string() const;
};

ChernCharacter ch_line(const Scroll& s, const DivisorClass& d);
ChernCharacter ch_sum(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter ch_scale(const Integer& k, const ChernCharacter& a);
/// Shift by one: every component changes sign.
ChernCharacter ch_shift(const ChernCharacter& a);
ChernCharacter ch_dual(const ChernCharacter& a);
/// Tensor with O(d).
ChernCharacter ch_twist(const Scroll& s, const ChernCharacter& a, const DivisorClass& d);

/// chi(E, F) by Riemann-Roch with chi(O_X) = 1. Throws NonIntegralPairing
/// if the result is not an integer.
Integer euler_pairing(const Scroll& s, const ChernCharacter& e, const ChernCharacter& f);

/// c1 . omega / rank, reduced. Throws ZeroRank.
Rational canonical_slope(const Scroll& s, const ChernCharacter& ch);

struct MonadProfile {
  Integer a, b, c, d;
  friend bool operator==(const MonadProfile&, const MonadProfile&) = default;
};

/// For E = sum O(d_i): a = h1(E(-F)), b = h1(E(F-H)), c = h0(E), d = h2(E(-H)).
/// Throws NotACM if some summand is not ACM.
MonadProfile monad_profile(const Scroll& s, const std::vector<DivisorClass>& summands);

}  // namespace scrollacm
