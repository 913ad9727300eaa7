#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HOPF_DEFINE_ERROR(Name)               \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(#Name ": " + what) {}         \
  };

HOPF_DEFINE_ERROR(DivisionByZero)
HOPF_DEFINE_ERROR(OrderMismatch)
HOPF_DEFINE_ERROR(NotDivisible)
HOPF_DEFINE_ERROR(RingMismatch)
HOPF_DEFINE_ERROR(SplitBudgetExceeded)
HOPF_DEFINE_ERROR(ParseError)
HOPF_DEFINE_ERROR(NonConfluentPresentation)
HOPF_DEFINE_ERROR(DimensionMismatch)
HOPF_DEFINE_ERROR(AxiomFailure)
HOPF_DEFINE_ERROR(NotClosed)
HOPF_DEFINE_ERROR(BoundExceeded)
HOPF_DEFINE_ERROR(NotPermutation)
HOPF_DEFINE_ERROR(NotAPartialAction)
HOPF_DEFINE_ERROR(NotAMorphism)
HOPF_DEFINE_ERROR(UnknownName)

#undef HOPF_DEFINE_ERROR

}  // namespace hopf
