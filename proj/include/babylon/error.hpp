#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace babylon {

enum class ErrorKind {
  // input / parse errors
  EmptyInput,
  MalformedNumeral,
  MalformedExpression,
  MalformedProblemFile,
  MalformedTrace,
  Io,
  // domain errors
  InvalidArgument,
  NonTerminatingExpansion,
  NegativeResult,
  DivisionByZero,
  NotAPerfectSquare,
  NegativeDiscriminant,
  IrrationalRoot,
  DegenerateTriangle,
  DegeneratePolygon,
  InvalidConfig,
  InconsistentProblem,
  WidthNotGreaterThanTransversal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for the kinds caused by unreadable input rather than by the math.
bool is_input_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace babylon
