#pragma once

#include <stdexcept>
#include <string>

namespace cyfano {

// Two failure families, matching the CLI exit codes: ValidationError is a
// rejection of the input (exit 1), InternalCheckError is a failed internal
// cross-check, i.e. a bug or an inconsistency the library refuses to paper
// over (exit 3).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class InternalCheckError : public Error {
 public:
  using Error::Error;
};

#define CYFANO_VALIDATION_ERROR(Name)                                   \
  class Name : public ValidationError {                                 \
   public:                                                              \
    explicit Name(const std::string& what) : ValidationError(#Name, what) {} \
  }

#define CYFANO_INTERNAL_ERROR(Name)                                     \
  class Name : public InternalCheckError {                              \
   public:                                                              \
    explicit Name(const std::string& what) : InternalCheckError(#Name, what) {} \
  }

CYFANO_VALIDATION_ERROR(DimensionMismatch);
CYFANO_VALIDATION_ERROR(NotAFan);
CYFANO_VALIDATION_ERROR(NotSimplicial);
CYFANO_VALIDATION_ERROR(TorusFactor);
CYFANO_VALIDATION_ERROR(NotComplete);
CYFANO_VALIDATION_ERROR(UnboundedPolytope);
CYFANO_VALIDATION_ERROR(WrongDegree);
CYFANO_VALIDATION_ERROR(NotFano);
CYFANO_VALIDATION_ERROR(NotAmple);
CYFANO_VALIDATION_ERROR(NotCalabiYau);
CYFANO_VALIDATION_ERROR(DimensionTooSmall);
CYFANO_VALIDATION_ERROR(AdjunctionFailed);
CYFANO_VALIDATION_ERROR(IndeterminateChase);
CYFANO_VALIDATION_ERROR(NotCertified);
CYFANO_VALIDATION_ERROR(UnknownEntry);
CYFANO_VALIDATION_ERROR(NonPrimitiveConfiguration);
CYFANO_VALIDATION_ERROR(InvalidInput);
CYFANO_VALIDATION_ERROR(NonIntegerEuler);

CYFANO_INTERNAL_ERROR(CrossCheckFailed);
CYFANO_INTERNAL_ERROR(NonIntegerSignatureTerm);

#undef CYFANO_VALIDATION_ERROR
#undef CYFANO_INTERNAL_ERROR

}  // namespace cyfano
