#pragma once

#include <stdexcept>
#include <string>

namespace chromsym {

// Base for every error raised by the library. Callers that only care about
// "something in the computation failed" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CHROMSYM_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

CHROMSYM_DEFINE_ERROR(NotDivisible);
CHROMSYM_DEFINE_ERROR(DivisionByZero);
CHROMSYM_DEFINE_ERROR(PoleAtPoint);
CHROMSYM_DEFINE_ERROR(NotPolynomial);
CHROMSYM_DEFINE_ERROR(SizeMismatch);
CHROMSYM_DEFINE_ERROR(DegreeMismatch);
CHROMSYM_DEFINE_ERROR(BasisMismatch);
CHROMSYM_DEFINE_ERROR(IndexOutOfRange);
CHROMSYM_DEFINE_ERROR(SizeLimitExceeded);
CHROMSYM_DEFINE_ERROR(InvalidPartition);
CHROMSYM_DEFINE_ERROR(InvalidTableau);
CHROMSYM_DEFINE_ERROR(InvalidHessenberg);
CHROMSYM_DEFINE_ERROR(InvalidFilling);
CHROMSYM_DEFINE_ERROR(NotProper);
CHROMSYM_DEFINE_ERROR(NotFlat);
CHROMSYM_DEFINE_ERROR(NotNonFlat);
CHROMSYM_DEFINE_ERROR(IsBaseTableau);
CHROMSYM_DEFINE_ERROR(ParseError);

#undef CHROMSYM_DEFINE_ERROR

}  // namespace chromsym
