#include "babylon/expression.hpp"

#include <cctype>
#include <string>

#include "babylon/error.hpp"

namespace babylon {

struct ExpressionTree::Node {
  enum class Kind { literal, add, sub, mul, div, recip, sqrt };

  Kind kind = Kind::literal;
  SexValue value;
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
};

namespace {

using Node = ExpressionTree::Node;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<Node> parse_all() {
    auto root = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::MalformedExpression,
                "'" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static std::unique_ptr<Node> make(Node::Kind kind, std::unique_ptr<Node> lhs, std::unique_ptr<Node> rhs = {}) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }

  std::unique_ptr<Node> parse_expr() {
    auto lhs = parse_term();
    while (true) {
      if (accept('+')) {
        lhs = make(Node::Kind::add, std::move(lhs), parse_term());
      } else if (accept('-')) {
        lhs = make(Node::Kind::sub, std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> parse_term() {
    auto lhs = parse_factor();
    while (true) {
      if (accept('*')) {
        lhs = make(Node::Kind::mul, std::move(lhs), parse_factor());
      } else if (accept('/')) {
        lhs = make(Node::Kind::div, std::move(lhs), parse_factor());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> parse_factor() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      auto inner = parse_expr();
      expect(')');
      return inner;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      Node::Kind kind{};
      if (name == "recip") {
        kind = Node::Kind::recip;
      } else if (name == "sqrt") {
        kind = Node::Kind::sqrt;
      } else {
        pos_ = start;
        fail("unknown function '" + std::string(name) + "'");
      }
      expect('(');
      auto arg = parse_expr();
      expect(')');
      return make(kind, std::move(arg));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',' || text_[pos_] == ';')) {
        ++pos_;
      }
      auto n = std::make_unique<Node>();
      n->value = parse_sexagesimal(text_.substr(start, pos_ - start));
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

SexValue eval(const Node& n) {
  switch (n.kind) {
    case Node::Kind::literal: return n.value;
    case Node::Kind::add: return eval(*n.lhs) + eval(*n.rhs);
    case Node::Kind::sub: return eval(*n.lhs) - eval(*n.rhs);
    case Node::Kind::mul: return eval(*n.lhs) * eval(*n.rhs);
    case Node::Kind::div: return eval(*n.lhs) / eval(*n.rhs);
    case Node::Kind::recip: return reciprocal(eval(*n.lhs));
    case Node::Kind::sqrt: return sqrt_exact(eval(*n.lhs));
  }
  throw Error(ErrorKind::InvalidArgument, "corrupt expression tree");
}

}  // namespace

ExpressionTree::ExpressionTree(std::unique_ptr<Node> root) : root_(std::move(root)) {}
ExpressionTree::ExpressionTree(ExpressionTree&&) noexcept = default;
ExpressionTree& ExpressionTree::operator=(ExpressionTree&&) noexcept = default;
ExpressionTree::~ExpressionTree() = default;

ExpressionTree ExpressionTree::parse(std::string_view text) {
  Parser p(text);
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw Error(ErrorKind::EmptyInput, "empty expression");
  }
  return ExpressionTree(p.parse_all());
}

SexValue ExpressionTree::evaluate() const { return eval(*root_); }

}  // namespace babylon
