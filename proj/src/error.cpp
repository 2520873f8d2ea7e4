#include "qlogic/error.hpp"

namespace qlogic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::ClosureFailure: return "ClosureFailure";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::InconsistentInput: return "InconsistentInput";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NonInjectiveCover: return "NonInjectiveCover";
    case ErrorKind::IllDefined: return "IllDefined";
    case ErrorKind::NotLocalized: return "NotLocalized";
    case ErrorKind::ScenarioMismatch: return "ScenarioMismatch";
    case ErrorKind::ZeroConditioningEvent: return "ZeroConditioningEvent";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace qlogic
