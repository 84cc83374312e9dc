#pragma once

#include <stdexcept>
#include <string>

namespace charzero {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CHARZERO_ERROR(Name)                 \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

CHARZERO_ERROR(NotCoprime);
CHARZERO_ERROR(NotPrime);
CHARZERO_ERROR(NotPrimePower);
CHARZERO_ERROR(PreconditionViolated);
CHARZERO_ERROR(UnsupportedFamily);
CHARZERO_ERROR(Unsupported);
CHARZERO_ERROR(TooLarge);
CHARZERO_ERROR(OrderBudgetExceeded);
CHARZERO_ERROR(BudgetExceeded);
CHARZERO_ERROR(ValidationFailed);
CHARZERO_ERROR(Degenerate);
CHARZERO_ERROR(ParseError);

#undef CHARZERO_ERROR

}  // namespace charzero
