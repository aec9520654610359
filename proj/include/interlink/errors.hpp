#pragma once

#include <stdexcept>
#include <string>

namespace interlink {

// Base for every error raised by the library. Callers that only care about
// "did validation fail" can catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input rejected by a precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A computed result failed an internal cross-check.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

#define INTERLINK_DEFINE_ERROR(Name, Base) \
  class Name : public Base {               \
   public:                                 \
    using Base::Base;                      \
  }

INTERLINK_DEFINE_ERROR(NonFinite, ValidationError);
INTERLINK_DEFINE_ERROR(DimensionMismatch, ValidationError);
INTERLINK_DEFINE_ERROR(NotHermitian, ValidationError);
INTERLINK_DEFINE_ERROR(ZeroVector, ValidationError);
INTERLINK_DEFINE_ERROR(DegenerateSpectrum, ValidationError);
INTERLINK_DEFINE_ERROR(NonOrthonormalBasis, ValidationError);
INTERLINK_DEFINE_ERROR(UnsupportedDimension, ValidationError);
INTERLINK_DEFINE_ERROR(BadCellIndex, ValidationError);
INTERLINK_DEFINE_ERROR(ShapeMismatch, ValidationError);
INTERLINK_DEFINE_ERROR(InvalidState, ValidationError);
INTERLINK_DEFINE_ERROR(InvalidDiagram, ValidationError);

INTERLINK_DEFINE_ERROR(NoConvergence, ConsistencyError);
INTERLINK_DEFINE_ERROR(NonNegligibleImaginaryPart, ConsistencyError);
INTERLINK_DEFINE_ERROR(NegativeProbability, ConsistencyError);

#undef INTERLINK_DEFINE_ERROR

}  // namespace interlink
