#ifndef MPK_TYPE_ERROR_HPP
#define MPK_TYPE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "mpk/syntax.hpp"

namespace mpk {

enum class TypeErrorCode {
  UnboundVar,
  ArityMismatch,
  AnnotationMismatch,
  EigenvariableViolation,
  DisciplineViolation,
  NotNegative,
  NotPropositional,
  BadSystemConstruct,
  BadPostInstance,
  NotClosedTerm,
};

std::string_view code_name(TypeErrorCode c);

struct TypeError {
  TypeErrorCode code;
  Path path;
  std::string rule;     // the inference rule that failed
  std::string message;

  std::string describe() const;
};

// Thrown internally by the checker and the exception-substitution
// helpers; the public entry points turn it back into a value.
class TypeErrorException : public std::runtime_error {
 public:
  explicit TypeErrorException(TypeError e)
      : std::runtime_error(e.describe()), error_(std::move(e)) {}
  const TypeError& error() const { return error_; }

 private:
  TypeError error_;
};

}  // namespace mpk

#endif  // MPK_TYPE_ERROR_HPP
