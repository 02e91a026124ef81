#include "babylon/error.hpp"

namespace babylon {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::MalformedNumeral: return "MalformedNumeral";
    case ErrorKind::MalformedExpression: return "MalformedExpression";
    case ErrorKind::MalformedProblemFile: return "MalformedProblemFile";
    case ErrorKind::MalformedTrace: return "MalformedTrace";
    case ErrorKind::Io: return "Io";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonTerminatingExpansion: return "NonTerminatingExpansion";
    case ErrorKind::NegativeResult: return "NegativeResult";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotAPerfectSquare: return "NotAPerfectSquare";
    case ErrorKind::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorKind::IrrationalRoot: return "IrrationalRoot";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::InconsistentProblem: return "InconsistentProblem";
    case ErrorKind::WidthNotGreaterThanTransversal: return "WidthNotGreaterThanTransversal";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput:
    case ErrorKind::MalformedNumeral:
    case ErrorKind::MalformedExpression:
    case ErrorKind::MalformedProblemFile:
    case ErrorKind::MalformedTrace:
    case ErrorKind::Io:
      return true;
    default:
      return false;
  }
}

}  // namespace babylon
