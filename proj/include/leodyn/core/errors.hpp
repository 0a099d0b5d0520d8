#pragma once
// Exception hierarchy shared by all modules.  Every failure that the
// library reports by throwing derives from leodyn::Error.

#include <stdexcept>
#include <string>

namespace leodyn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LEODYN_DEFINE_ERROR(Name)        \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

LEODYN_DEFINE_ERROR(ParseError)
LEODYN_DEFINE_ERROR(InvalidArgument)
LEODYN_DEFINE_ERROR(InvalidMap)
LEODYN_DEFINE_ERROR(PointOutsideDomain)
LEODYN_DEFINE_ERROR(ValueOutsideDomain)
LEODYN_DEFINE_ERROR(BadRadius)
LEODYN_DEFINE_ERROR(PrecisionExhausted)
LEODYN_DEFINE_ERROR(SymbolOutOfAlphabet)
LEODYN_DEFINE_ERROR(WordNotAllowed)
LEODYN_DEFINE_ERROR(TooLarge)
LEODYN_DEFINE_ERROR(EmptyRefinement)
LEODYN_DEFINE_ERROR(NoPeriodicPointInRegion)
LEODYN_DEFINE_ERROR(GapBelowCoveringTime)
LEODYN_DEFINE_ERROR(SpacingViolation)
LEODYN_DEFINE_ERROR(NotCoveringWithinBound)
LEODYN_DEFINE_ERROR(TruncationTooSmall)
LEODYN_DEFINE_ERROR(NotApplicable)
LEODYN_DEFINE_ERROR(NoReturnInPrefix)
LEODYN_DEFINE_ERROR(MalformedWord)
LEODYN_DEFINE_ERROR(ConsecutiveZeros)
LEODYN_DEFINE_ERROR(EmptyRemainder)

#undef LEODYN_DEFINE_ERROR

}  // namespace leodyn
