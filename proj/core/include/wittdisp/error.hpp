#ifndef WITTDISP_ERROR_HPP
#define WITTDISP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wd {

enum class Err {
  CompositeP,
  ReducibleModulus,
  ZeroPrecision,
  RingMismatch,
  NonIntegralDivision,
  LengthTooShort,
  NotInAugmentationIdeal,
  NoSection,
  NotInRelativeIdeal,
  SingularBasis,
  BadRank,
  FiltrationChanged,
  NonUnit,
  SingularPsi,
  BadTruncation,
  OddRank,
  BudgetExceeded,
  InvalidFiltrationLift,
  NonConvergent,
  ValuationMismatch,
  BadDescriptor,
  Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace wd

#endif
