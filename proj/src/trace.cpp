#include "babylon/trace.hpp"

#include <algorithm>
#include <sstream>

#include "babylon/error.hpp"

namespace babylon {

namespace {

std::string operand_text(const Operand& o) {
  if (const auto* id = std::get_if<std::string>(&o)) return *id;
  return std::get<SexValue>(o).to_string();
}

bool is_id_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }

bool is_valid_id(std::string_view s) {
  if (s.empty() || !is_id_start(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return is_id_start(c) || (c >= '0' && c <= '9'); });
}

[[noreturn]] void bad_expression(std::string_view text, std::string_view why) {
  throw Error(ErrorKind::MalformedTrace, "expression '" + std::string(text) + "': " + std::string(why));
}

Operand parse_operand(std::string_view whole, std::string_view token) {
  if (token.empty()) bad_expression(whole, "missing operand");
  if (is_id_start(token.front())) {
    if (!is_valid_id(token)) bad_expression(whole, "bad step id '" + std::string(token) + "'");
    return std::string(token);
  }
  try {
    return parse_value(token);
  } catch (const Error& e) {
    bad_expression(whole, e.what());
  }
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

void require_operands_known(const Trace& trace, const Expression& expr, std::string_view step_id) {
  for (const auto& o : expr.operands) {
    if (const auto* id = std::get_if<std::string>(&o); id && !trace.find(*id)) {
      throw Error(ErrorKind::InvalidArgument,
                  "step '" + std::string(step_id) + "' refers to unknown step '" + *id + "'");
    }
  }
}

}  // namespace

std::string Expression::to_string() const {
  switch (op) {
    case StepOp::given: return operand_text(operands.at(0));
    case StepOp::add: return operand_text(operands.at(0)) + " + " + operand_text(operands.at(1));
    case StepOp::sub: return operand_text(operands.at(0)) + " - " + operand_text(operands.at(1));
    case StepOp::mul: return operand_text(operands.at(0)) + " * " + operand_text(operands.at(1));
    case StepOp::div: return operand_text(operands.at(0)) + " / " + operand_text(operands.at(1));
    case StepOp::recip: return "recip(" + operand_text(operands.at(0)) + ")";
    case StepOp::sqrt: return "sqrt(" + operand_text(operands.at(0)) + ")";
  }
  return {};
}

Expression Expression::parse(std::string_view text) {
  for (auto [name, op] : {std::pair{std::string_view("recip("), StepOp::recip},
                          std::pair{std::string_view("sqrt("), StepOp::sqrt}}) {
    if (text.substr(0, name.size()) == name) {
      if (text.back() != ')') bad_expression(text, "missing ')'");
      return unary(op, parse_operand(text, text.substr(name.size(), text.size() - name.size() - 1)));
    }
  }
  const auto tokens = split(text, ' ');
  if (tokens.size() == 1) {
    Operand literal = parse_operand(text, tokens[0]);
    if (!std::holds_alternative<SexValue>(literal)) bad_expression(text, "a given must be a literal");
    return {StepOp::given, {std::move(literal)}};
  }
  if (tokens.size() != 3 || tokens[1].size() != 1) bad_expression(text, "expected 'lhs op rhs'");
  StepOp op{};
  switch (tokens[1][0]) {
    case '+': op = StepOp::add; break;
    case '-': op = StepOp::sub; break;
    case '*': op = StepOp::mul; break;
    case '/': op = StepOp::div; break;
    default: bad_expression(text, "unknown operator");
  }
  return binary(op, parse_operand(text, tokens[0]), parse_operand(text, tokens[2]));
}

const SexValue& Trace::record(std::string id, Expression expr, StepKind kind,
                              std::optional<std::string> tablet_line) {
  SexValue v = evaluate(expr, *this);
  append(TraceStep{std::move(id), std::move(tablet_line), kind, std::move(expr), std::move(v), {}});
  return steps_.back().value;
}

void Trace::append(TraceStep step) {
  if (!is_valid_id(step.id)) throw Error(ErrorKind::InvalidArgument, "bad step id '" + step.id + "'");
  if (find(step.id)) throw Error(ErrorKind::InvalidArgument, "duplicate step id '" + step.id + "'");
  require_operands_known(*this, step.expression, step.id);
  steps_.push_back(std::move(step));
}

const TraceStep* Trace::find(std::string_view id) const {
  const auto it = std::find_if(steps_.begin(), steps_.end(), [&](const auto& s) { return s.id == id; });
  return it == steps_.end() ? nullptr : &*it;
}

const SexValue& Trace::value(std::string_view id) const {
  const TraceStep* step = find(id);
  if (!step) throw Error(ErrorKind::InvalidArgument, "no step '" + std::string(id) + "'");
  return step->value;
}

SexValue evaluate(const Expression& expr, const Trace& context) {
  auto arg = [&](std::size_t i) -> SexValue {
    if (i >= expr.operands.size()) throw Error(ErrorKind::InvalidArgument, "missing operand");
    const Operand& o = expr.operands[i];
    if (const auto* id = std::get_if<std::string>(&o)) return context.value(*id);
    return std::get<SexValue>(o);
  };
  switch (expr.op) {
    case StepOp::given: return arg(0);
    case StepOp::add: return combine(Op::add, arg(0), arg(1));
    case StepOp::sub: return combine(Op::sub, arg(0), arg(1));
    case StepOp::mul: return combine(Op::mul, arg(0), arg(1));
    case StepOp::div: return combine(Op::div, arg(0), arg(1));
    case StepOp::recip: return reciprocal(arg(0));
    case StepOp::sqrt: return sqrt_exact(arg(0));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown step operation");
}

std::vector<std::string> check_integrity(const Trace& trace) {
  std::vector<std::string> problems;
  Trace replayed;
  for (const auto& step : trace.steps()) {
    try {
      const SexValue v = evaluate(step.expression, replayed);
      if (v != step.value) {
        problems.push_back(step.id + ": recorded " + step.value.to_string() + ", re-evaluates to " +
                           v.to_string());
      }
    } catch (const Error& e) {
      problems.push_back(step.id + ": " + e.what());
    }
    try {
      replayed.append(step);
    } catch (const Error& e) {
      problems.push_back(step.id + ": " + e.what());
    }
  }
  return problems;
}

std::string_view to_string(StepKind kind) noexcept {
  return kind == StepKind::attested ? "attested" : "reconstructed";
}

std::string format_step(const TraceStep& step) {
  std::string line = step.id;
  line += '\t';
  line += step.tablet_line.value_or("-");
  line += '\t';
  line += to_string(step.kind);
  line += '\t';
  line += step.expression.to_string();
  line += "\t= ";
  line += step.value.to_string();
  return line;
}

std::string format_trace(const Trace& trace) {
  std::string out;
  for (const auto& step : trace.steps()) {
    out += format_step(step);
    out += '\n';
  }
  return out;
}

Trace parse_trace(std::string_view text) {
  Trace trace;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) -> void {
      throw Error(ErrorKind::MalformedTrace, "line " + std::to_string(line_no) + ": " + why);
    };
    const auto fields = split(line, '\t');
    if (fields.size() != 5) fail("expected 5 tab-separated fields, got " + std::to_string(fields.size()));
    if (fields[4].substr(0, 2) != "= ") fail("value field must start with '= '");

    TraceStep step;
    step.id = std::string(fields[0]);
    if (fields[1] != "-") step.tablet_line = std::string(fields[1]);
    if (fields[2] == "attested") {
      step.kind = StepKind::attested;
    } else if (fields[2] == "reconstructed") {
      step.kind = StepKind::reconstructed;
    } else {
      fail("unknown step kind '" + std::string(fields[2]) + "'");
    }
    try {
      step.expression = Expression::parse(fields[3]);
      step.value = parse_value(fields[4].substr(2));
      trace.append(std::move(step));
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  return trace;
}

std::string TraceDiff::to_string() const {
  std::ostringstream os;
  for (const auto& id : missing) os << "missing\t" << id << '\n';
  for (const auto& id : extra) os << "extra\t" << id << '\n';
  for (const auto& m : mismatches) os << "mismatch\t" << m.id << "\tgot " << m.got << "\texpected " << m.expected << '\n';
  return os.str();
}

TraceDiff diff_trace(const Trace& got, const Trace& expected, bool attested_only) {
  TraceDiff diff;
  for (const auto& want : expected.steps()) {
    if (attested_only && want.kind != StepKind::attested) continue;
    const TraceStep* have = got.find(want.id);
    if (!have) {
      diff.missing.push_back(want.id);
    } else if (have->value != want.value) {
      diff.mismatches.push_back({want.id, have->value, want.value});
    }
  }
  if (!attested_only) {
    for (const auto& have : got.steps()) {
      if (!expected.find(have.id)) diff.extra.push_back(have.id);
    }
  }
  return diff;
}

}  // namespace babylon
