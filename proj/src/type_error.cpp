#include "mpk/type_error.hpp"

namespace mpk {

std::string_view code_name(TypeErrorCode c) {
  switch (c) {
    case TypeErrorCode::UnboundVar: return "UnboundVar";
    case TypeErrorCode::ArityMismatch: return "ArityMismatch";
    case TypeErrorCode::AnnotationMismatch: return "AnnotationMismatch";
    case TypeErrorCode::EigenvariableViolation: return "EigenvariableViolation";
    case TypeErrorCode::DisciplineViolation: return "DisciplineViolation";
    case TypeErrorCode::NotNegative: return "NotNegative";
    case TypeErrorCode::NotPropositional: return "NotPropositional";
    case TypeErrorCode::BadSystemConstruct: return "BadSystemConstruct";
    case TypeErrorCode::BadPostInstance: return "BadPostInstance";
    case TypeErrorCode::NotClosedTerm: return "NotClosedTerm";
  }
  return "?";
}

std::string TypeError::describe() const {
  std::string s = std::string(code_name(code)) + " at " + show_path(path);
  if (!rule.empty()) s += " [" + rule + "]";
  return s + ": " + message;
}

}  // namespace mpk
