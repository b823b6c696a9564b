#include "scrollacm/chern.hpp"

#include "scrollacm/errors.hpp"

namespace scrollacm {

std::string ChernCharacter::to_string() const {
  return "(rank " + rank.get_str() + ", c1 " + c1.to_string() + ", ch2 " + scrollacm::to_string(ch2()) + ")";
}

ChernCharacter ch_line(const Scroll& s, const DivisorClass& d) { return {1, d, intersect(s, d, d)}; }

ChernCharacter ch_sum(const ChernCharacter& a, const ChernCharacter& b) {
  return {a.rank + b.rank, a.c1 + b.c1, a.ch2_times2 + b.ch2_times2};
}

ChernCharacter ch_scale(const Integer& k, const ChernCharacter& a) {
  return {k * a.rank, k * a.c1, k * a.ch2_times2};
}

ChernCharacter ch_shift(const ChernCharacter& a) { return {-a.rank, -a.c1, -a.ch2_times2}; }

ChernCharacter ch_dual(const ChernCharacter& a) { return {a.rank, -a.c1, a.ch2_times2}; }

ChernCharacter ch_twist(const Scroll& s, const ChernCharacter& a, const DivisorClass& d) {
  // ch(E(d)) = ch(E) * (1 + d + d^2/2)
  return {a.rank, a.c1 + a.rank * d,
          a.ch2_times2 + 2 * intersect(s, a.c1, d) + a.rank * intersect(s, d, d)};
}

Integer euler_pairing(const Scroll& s, const ChernCharacter& e, const ChernCharacter& f) {
  // chi(E,F) = rE rF + rE ch2F + rF ch2E - c1E.c1F - (rE c1F - rF c1E).omega / 2
  const DivisorClass mixed = e.rank * f.c1 - f.rank * e.c1;
  const Integer twice = 2 * e.rank * f.rank + e.rank * f.ch2_times2 + f.rank * e.ch2_times2 -
                        2 * intersect(s, e.c1, f.c1) - intersect(s, mixed, canonical_class(s));
  if (!mpz_even_p(twice.get_mpz_t())) {
    throw NonIntegralPairing("Euler pairing of " + e.to_string() + " and " + f.to_string() +
                             " is not an integer");
  }
  return twice / 2;
}

Rational canonical_slope(const Scroll& s, const ChernCharacter& ch) {
  if (ch.rank == 0) throw ZeroRank("canonical slope of a rank zero character");
  return make_rational(intersect(s, ch.c1, canonical_class(s)), ch.rank);
}

MonadProfile monad_profile(const Scroll& s, const std::vector<DivisorClass>& summands) {
  MonadProfile p{0, 0, 0, 0};
  const DivisorClass f = DivisorClass::F(), h = DivisorClass::H();
  for (const auto& d : summands) {
    if (!is_acm_line_bundle(s, d)) throw NotACM("O(" + d.to_string() + ") is not ACM on " + s.name());
    p.a += cohomology(s, d - f).h1;
    p.b += cohomology(s, d + f - h).h1;
    p.c += cohomology(s, d).h0;
    p.d += cohomology(s, d - h).h2;
  }
  return p;
}

}  // namespace scrollacm
