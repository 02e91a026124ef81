#include "babylon/replay.hpp"

#include <sstream>

#include "babylon/error.hpp"
#include "babylon/geometry.hpp"
#include "babylon/sumprod.hpp"

namespace babylon {

namespace {

constexpr auto kAttested = StepKind::attested;
constexpr auto kReconstructed = StepKind::reconstructed;

const char* const kRestoredO1 = "O1 reads <10>; the damaged sign is restored as 10,0";
const char* const kRestoredR3 = "the factor 0;40 in R3 is restored; only the result 20 is legible";

void record_root(Trace& trace, const std::string& id, const std::string& radicand_id, StepKind kind,
                 std::optional<std::string> line = std::nullopt) {
  try {
    trace.record(id, Expression::unary(StepOp::sqrt, radicand_id), kind, std::move(line));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAPerfectSquare) throw;
    throw Error(ErrorKind::IrrationalRoot, "step " + id + ": " + e.what());
  }
}

void set_note(Trace& trace, std::string_view id, std::string note) {
  for (auto& step : trace.steps()) {
    if (step.id == id) step.note = std::move(note);
  }
}

}  // namespace

Smt18Problem Smt18Problem::tablet() {
  return {parse_sexagesimal("10,0"), parse_sexagesimal("36,0,0"), parse_sexagesimal("20,24")};
}

std::pair<Smt18Solution, Trace> solve_smt18(const Smt18Problem& prob) {
  if (prob.p1.is_zero() || prob.p2.is_zero() || prob.p3.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "p1, p2, p3 must all be positive");
  }
  Trace t;
  t.record("p1", Expression::given(prob.p1), kAttested, "O1");
  t.record("p2", Expression::given(prob.p2), kAttested, "O2");
  t.record("p3", Expression::given(prob.p3), kAttested, "O3");
  set_note(t, "p1", kRestoredO1);

  // Step 1: 4 * p2 = xy * w(z+w), so w(z+w) = 4 * p2 * recip(p1).
  t.record("scaled_A", Expression::binary(StepOp::mul, "p2", SexValue{4}), kAttested, "O5");
  t.record("recip_p1", Expression::unary(StepOp::recip, "p1"), kAttested, "O6");
  t.record("quotient_B", Expression::binary(StepOp::mul, "scaled_A", "recip_p1"), kAttested, "O7");
  t.record("square_B", Expression::binary(StepOp::mul, "quotient_B", "quotient_B"), kAttested, "O8");
  t.record("doubled_square", Expression::binary(StepOp::mul, "square_B", SexValue{2}), kAttested, "O8");
  t.record("doubled_B", Expression::binary(StepOp::mul, "quotient_B", SexValue{2}), kAttested, "O9");

  // X = (z+w)^2, Y = 2w^2: X*Y = 2(w(z+w))^2 and X+Y = z^2+w^2 + 2w(z+w).
  t.record("sum_XY", Expression::binary(StepOp::add, "p3", "doubled_B"));
  SumProductIds ids;
  ids.larger = "X";
  ids.smaller = "Y";
  solve_sum_product_into(t, "sum_XY", "doubled_square", ids);

  t.record("w_squared", Expression::binary(StepOp::div, "Y", SexValue{2}));
  record_root(t, "w", "w_squared", kReconstructed);
  record_root(t, "z_plus_w", "X", kReconstructed);
  const SexValue w = t.value("w");
  if (t.value("z_plus_w") <= w + w) {
    throw Error(ErrorKind::WidthNotGreaterThanTransversal,
                "z + w = " + t.value("z_plus_w").to_string() + " gives z <= w = " + w.to_string());
  }
  t.record("z", Expression::binary(StepOp::sub, "z_plus_w", "w"));

  // Step 2: x / (z - w) = y / w, so x = ((z - w) / w) * y.
  t.record("z_minus_w", Expression::binary(StepOp::sub, "z", "w"));
  t.record("recip_w", Expression::unary(StepOp::recip, "w"));
  t.record("ratio_k", Expression::binary(StepOp::mul, "z_minus_w", "recip_w"));
  t.record("y_squared", Expression::binary(StepOp::div, "p1", "ratio_k"));
  record_root(t, "y", "y_squared", kAttested, "R2");
  t.record("x", Expression::binary(StepOp::mul, "y", "ratio_k"), kAttested, "R3");
  set_note(t, "x", kRestoredR3);

  Smt18Solution sol = solution_from_trace(t);
  const VerificationReport report = verify_solution(sol, prob);
  if (!report.all_passed()) throw Error(ErrorKind::InconsistentProblem, report.to_string());
  return {std::move(sol), std::move(t)};
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

std::string VerificationReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks) os << c.name << '\t' << (c.passed ? "pass" : "FAIL") << '\n';
  return os.str();
}

VerificationReport verify_solution(const Smt18Solution& sol, const Smt18Problem& prob) {
  const Rational& x = sol.x.rational();
  const Rational& y = sol.y.rational();
  const Rational& z = sol.z.rational();
  const Rational& w = sol.w.rational();

  bool transversal_ok = false;
  try {
    transversal_ok = geometry::transversal_w(sol.x, sol.y, sol.z) == sol.w;
  } catch (const Error&) {
    transversal_ok = false;
  }

  VerificationReport r;
  r.checks = {
      {"product_xy", x * y == prob.p1.rational()},
      {"area_product", (x * (z + w) / 2) * (y * w / 2) == prob.p2.rational()},
      {"sum_of_squares", z * z + w * w == prob.p3.rational()},
      {"proportion", x * w == y * (z - w)},
      {"width_exceeds_transversal", z > w},
      {"geometry_transversal", transversal_ok},
  };
  return r;
}

Trace canonical_trace() {
  Trace t;
  auto step = [&t](std::string id, const char* line, StepKind kind, std::string_view expr,
                   std::string_view value) {
    TraceStep s;
    s.id = std::move(id);
    if (line) s.tablet_line = line;
    s.kind = kind;
    s.expression = Expression::parse(expr);
    s.value = parse_value(value);
    t.append(std::move(s));
  };

  // Obverse, legible lines.
  step("p1", "O1", kAttested, "10,0", "10,0");
  step("p2", "O2", kAttested, "36,0,0", "36,0,0");
  step("p3", "O3", kAttested, "20,24", "20,24");
  step("scaled_A", "O5", kAttested, "p2 * 4", "2,24,0,0");
  step("recip_p1", "O6", kAttested, "recip(p1)", "0;0,6");
  step("quotient_B", "O7", kAttested, "scaled_A * recip_p1", "14,24");
  step("square_B", "O8", kAttested, "quotient_B * quotient_B", "3,27,21,36");
  step("doubled_square", "O8", kAttested, "square_B * 2", "6,54,43,12");
  step("doubled_B", "O9", kAttested, "quotient_B * 2", "28,48");

  // The broken passage: the substitution X = (z+w)^2, Y = 2w^2.
  step("sum_XY", nullptr, kReconstructed, "p3 + doubled_B", "49,12");
  step("half_sum", nullptr, kReconstructed, "sum_XY / 2", "24,36");
  step("half_sum_sq", nullptr, kReconstructed, "half_sum * half_sum", "10,5,9,36");
  step("discriminant", nullptr, kReconstructed, "half_sum_sq - doubled_square", "3,10,26,24");
  step("half_diff", nullptr, kReconstructed, "sqrt(discriminant)", "13,48");
  step("X", nullptr, kReconstructed, "half_sum + half_diff", "38,24");
  step("Y", nullptr, kReconstructed, "half_sum - half_diff", "10,48");
  step("w_squared", nullptr, kReconstructed, "Y / 2", "5,24");
  step("w", nullptr, kReconstructed, "sqrt(w_squared)", "18");
  step("z_plus_w", nullptr, kReconstructed, "sqrt(X)", "48");
  step("z", nullptr, kReconstructed, "z_plus_w - w", "30");

  // The transversal condition x/(z-w) = y/w gives x = (2/3) y.
  step("z_minus_w", nullptr, kReconstructed, "z - w", "12");
  step("recip_w", nullptr, kReconstructed, "recip(w)", "0;3,20");
  step("ratio_k", nullptr, kReconstructed, "z_minus_w * recip_w", "0;40");
  step("y_squared", nullptr, kReconstructed, "p1 / ratio_k", "15,0");

  // Reverse.
  step("y", "R2", kAttested, "sqrt(y_squared)", "30");
  step("x", "R3", kAttested, "y * ratio_k", "20");

  set_note(t, "p1", kRestoredO1);
  set_note(t, "x", kRestoredR3);
  return t;
}

Smt18Solution solution_from_trace(const Trace& trace) {
  return {trace.value("x"), trace.value("y"), trace.value("z"), trace.value("w")};
}

}  // namespace babylon
