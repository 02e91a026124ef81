#pragma once

// Calculator expressions over sexagesimal numerals:
//
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*
//   factor := numeral | "(" expr ")" | ("recip" | "sqrt") "(" expr ")"
//
// Whitespace may separate tokens but not appear inside a numeral.

#include <memory>
#include <string_view>

#include "babylon/sexnum.hpp"

namespace babylon {

class ExpressionTree {
 public:
  struct Node;

  /// Throws MalformedExpression or MalformedNumeral.
  static ExpressionTree parse(std::string_view text);

  ExpressionTree(ExpressionTree&&) noexcept;
  ExpressionTree& operator=(ExpressionTree&&) noexcept;
  ~ExpressionTree();

  /// Exact value; domain errors (DivisionByZero, NegativeResult,
  /// NotAPerfectSquare) propagate.
  SexValue evaluate() const;

 private:
  explicit ExpressionTree(std::unique_ptr<Node> root);

  std::unique_ptr<Node> root_;
};

/// Parses the whole text before evaluating, so syntax errors are reported
/// ahead of any arithmetic failure.
inline SexValue evaluate_expression(std::string_view text) { return ExpressionTree::parse(text).evaluate(); }

}  // namespace babylon
