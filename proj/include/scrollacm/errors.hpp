#pragma once

#include <stdexcept>
#include <string>

namespace scrollacm {

/// Base for every library error. User-facing misuse and internal
/// invariant failures are told apart by `internal()`.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual bool internal() const { return false; }
};

#define SCROLLACM_ERROR(Name)            \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

SCROLLACM_ERROR(InvalidScroll)
SCROLLACM_ERROR(DomainError)
SCROLLACM_ERROR(NoInitializedTwist)
SCROLLACM_ERROR(ZeroRank)
SCROLLACM_ERROR(NotACM)
SCROLLACM_ERROR(ShapeMismatch)
SCROLLACM_ERROR(WrongDegree)
SCROLLACM_ERROR(NotIrregular)

#undef SCROLLACM_ERROR

/// ch2 bookkeeping went wrong; a corrupted character reached the pairing.
class NonIntegralPairing : public Error {
 public:
  using Error::Error;
  bool internal() const override { return true; }
};

/// Tracked TriVector disagrees with the recomputed Euler pairings.
class InconsistentState : public Error {
 public:
  using Error::Error;
  bool internal() const override { return true; }
};

class NotInKfrak : public Error {
 public:
  NotInKfrak(const std::string& what, int failing_t) : Error(what), failing_t_(failing_t) {}
  int failing_t() const { return failing_t_; }

 private:
  int failing_t_;
};

}  // namespace scrollacm
