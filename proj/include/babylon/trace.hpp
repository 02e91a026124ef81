#pragma once

// Line-annotated computation record shared by the solvers and the tablet
// replay. Each step names its operation and operands so it can be
// re-evaluated independently of the code that produced it.
//
// Text form, one step per line, tab separated:
//
//   <id> TAB <tablet line or "-"> TAB <attested|reconstructed> TAB <expression> TAB "= " <value>
//
// Expressions are a bare literal (a given), "lhs <op> rhs" with op one of
// + - * /, or "recip(arg)" / "sqrt(arg)". Operands are step ids or literals.
// Values use SexValue::to_string (sexagesimal, or "n/d" when non-terminating).

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "babylon/sexnum.hpp"

namespace babylon {

enum class StepKind { attested, reconstructed };

enum class StepOp { given, add, sub, mul, div, recip, sqrt };

/// A reference to an earlier step by id, or a literal constant.
using Operand = std::variant<std::string, SexValue>;

struct Expression {
  StepOp op = StepOp::given;
  std::vector<Operand> operands;

  static Expression given(SexValue v) { return {StepOp::given, {std::move(v)}}; }
  static Expression binary(StepOp op, Operand lhs, Operand rhs) {
    return {op, {std::move(lhs), std::move(rhs)}};
  }
  static Expression unary(StepOp op, Operand arg) { return {op, {std::move(arg)}}; }

  std::string to_string() const;
  static Expression parse(std::string_view text);

  friend bool operator==(const Expression&, const Expression&) = default;
};

struct TraceStep {
  std::string id;
  std::optional<std::string> tablet_line;
  StepKind kind = StepKind::reconstructed;
  Expression expression;
  SexValue value;
  std::string note;  // provenance remark, not part of the text form
};

class Trace {
 public:
  /// Evaluates expr against the steps recorded so far, appends the step and
  /// returns its value. Throws InvalidArgument for a duplicate id or an
  /// unknown operand; arithmetic errors propagate unchanged.
  const SexValue& record(std::string id, Expression expr,
                         StepKind kind = StepKind::reconstructed,
                         std::optional<std::string> tablet_line = std::nullopt);

  /// Appends a step with a precomputed value. Operand ids must already exist.
  void append(TraceStep step);

  const TraceStep* find(std::string_view id) const;
  /// Throws InvalidArgument when id is absent.
  const SexValue& value(std::string_view id) const;

  const std::vector<TraceStep>& steps() const noexcept { return steps_; }
  std::vector<TraceStep>& steps() noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }

 private:
  std::vector<TraceStep> steps_;
};

/// Re-evaluates expr using values of steps in context.
SexValue evaluate(const Expression& expr, const Trace& context);

/// Problems found by re-evaluating every step from its operands; empty when
/// the trace is internally consistent.
std::vector<std::string> check_integrity(const Trace& trace);

std::string_view to_string(StepKind kind) noexcept;

std::string format_step(const TraceStep& step);
std::string format_trace(const Trace& trace);

/// Blank lines and lines starting with '#' are skipped. Throws MalformedTrace
/// on lines that do not follow the text form.
Trace parse_trace(std::string_view text);

struct TraceDiff {
  struct Mismatch {
    std::string id;
    SexValue got;
    SexValue expected;
  };

  std::vector<std::string> missing;  // in expected, absent from got
  std::vector<std::string> extra;    // in got, absent from expected
  std::vector<Mismatch> mismatches;

  bool empty() const noexcept { return missing.empty() && extra.empty() && mismatches.empty(); }
  std::string to_string() const;
};

/// Aligns steps by id. With attested_only, only attested steps of expected
/// are compared and nothing counts as extra.
TraceDiff diff_trace(const Trace& got, const Trace& expected, bool attested_only = false);

}  // namespace babylon
