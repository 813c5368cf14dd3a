#pragma once

#include <stdexcept>
#include <string>

namespace eqbif {

/// How the CLI classifies a failure when choosing an exit status.
enum class ErrorCategory {
  Validation,     ///< bad input, unmet precondition, unsupported request
  Computational,  ///< numerical breakdown or missing spectral data
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ErrorCategory category() const noexcept { return ErrorCategory::Validation; }
  virtual const char* kind() const noexcept = 0;
};

#define EQBIF_DEFINE_ERROR(Name, Category)                                        \
  class Name : public Error {                                                     \
   public:                                                                        \
    using Error::Error;                                                           \
    ErrorCategory category() const noexcept override { return ErrorCategory::Category; } \
    const char* kind() const noexcept override { return #Name; }                  \
  }

EQBIF_DEFINE_ERROR(NotInvertible, Validation);
EQBIF_DEFINE_ERROR(DomainError, Validation);
EQBIF_DEFINE_ERROR(SchemaError, Validation);
EQBIF_DEFINE_ERROR(ValidationError, Validation);
EQBIF_DEFINE_ERROR(PreconditionError, Validation);
EQBIF_DEFINE_ERROR(UnsupportedDomain, Validation);
EQBIF_DEFINE_ERROR(NotAMember, Validation);
EQBIF_DEFINE_ERROR(MissingClass, Validation);
EQBIF_DEFINE_ERROR(NonInjectiveTable, Validation);
EQBIF_DEFINE_ERROR(ConvergenceError, Computational);
EQBIF_DEFINE_ERROR(InsufficientSpectrum, Computational);

#undef EQBIF_DEFINE_ERROR

}  // namespace eqbif
