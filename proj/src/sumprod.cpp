#include "babylon/sumprod.hpp"

#include "babylon/error.hpp"

namespace babylon {

namespace {

// sqrt_exact, with the failure reported as the solver's error kind.
SexValue solver_root(const Trace& trace, const std::string& id) {
  try {
    return sqrt_exact(trace.value(id));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAPerfectSquare) throw;
    throw Error(ErrorKind::IrrationalRoot, "step " + id + ": " + e.what());
  }
}

}  // namespace

RatioConstraint::RatioConstraint(SexValue coefficient) : coefficient_(std::move(coefficient)) {
  if (coefficient_.is_zero()) throw Error(ErrorKind::InvalidArgument, "ratio coefficient must be positive");
}

PairSolution solve_sum_product_into(Trace& trace, const std::string& sum_id,
                                    const std::string& product_id, const SumProductIds& ids) {
  const SexValue half_sum = trace.record(ids.half_sum, Expression::binary(StepOp::div, sum_id, SexValue{2}));
  const SexValue square = trace.record(ids.half_sum_sq, Expression::binary(StepOp::mul, ids.half_sum, ids.half_sum));
  const SexValue product = trace.value(product_id);
  if (square < product) {
    throw Error(ErrorKind::NegativeDiscriminant,
                "(s/2)^2 = " + square.to_string() + " < p = " + product.to_string() + " (half-sum " +
                    half_sum.to_string() + ")");
  }
  trace.record(ids.discriminant, Expression::binary(StepOp::sub, ids.half_sum_sq, product_id));

  // Check the root before recording so the failure carries the solver's kind.
  solver_root(trace, ids.discriminant);
  trace.record(ids.half_diff, Expression::unary(StepOp::sqrt, ids.discriminant));
  PairSolution out;
  out.larger = trace.record(ids.larger, Expression::binary(StepOp::add, ids.half_sum, ids.half_diff));
  out.smaller = trace.record(ids.smaller, Expression::binary(StepOp::sub, ids.half_sum, ids.half_diff));
  return out;
}

std::pair<PairSolution, Trace> solve_sum_product(const SumProductProblem& prob) {
  Trace trace;
  trace.record("sum", Expression::given(prob.s));
  trace.record("product", Expression::given(prob.p));
  PairSolution sol = solve_sum_product_into(trace, "sum", "product");
  return {std::move(sol), std::move(trace)};
}

ProductRatioSolution solve_product_ratio_into(Trace& trace, const std::string& product_id,
                                              const std::string& ratio_id, const ProductRatioIds& ids) {
  if (trace.value(ratio_id).is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "ratio coefficient must be positive");
  }
  trace.record(ids.y_squared, Expression::binary(StepOp::div, product_id, ratio_id));
  solver_root(trace, ids.y_squared);
  ProductRatioSolution out;
  out.y = trace.record(ids.y, Expression::unary(StepOp::sqrt, ids.y_squared));
  out.x = trace.record(ids.x, Expression::binary(StepOp::mul, ids.y, ratio_id));
  return out;
}

ProductRatioSolution solve_product_ratio(const SexValue& p, const RatioConstraint& k) {
  Trace trace;
  trace.record("product", Expression::given(p));
  trace.record("ratio", Expression::given(k.coefficient()));
  return solve_product_ratio_into(trace, "product", "ratio");
}

}  // namespace babylon
