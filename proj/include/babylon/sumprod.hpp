#pragma once

// Completing the square: two unknowns from their sum and product, and the
// product-with-ratio variant (x*y = p, x = k*y).

#include <string>
#include <utility>

#include "babylon/sexnum.hpp"
#include "babylon/trace.hpp"

namespace babylon {

struct SumProductProblem {
  SexValue s;  // X + Y
  SexValue p;  // X * Y
};

struct PairSolution {
  SexValue larger;
  SexValue smaller;

  friend bool operator==(const PairSolution&, const PairSolution&) = default;
};

/// x = coefficient * y, coefficient > 0.
class RatioConstraint {
 public:
  /// Throws InvalidArgument for a zero coefficient.
  explicit RatioConstraint(SexValue coefficient);

  const SexValue& coefficient() const noexcept { return coefficient_; }

 private:
  SexValue coefficient_;
};

/// Step ids written by the trace-producing overloads. Callers embedding the
/// solver in a longer trace may rename the outputs.
struct SumProductIds {
  std::string half_sum = "half_sum";
  std::string half_sum_sq = "half_sum_sq";
  std::string discriminant = "discriminant";
  std::string half_diff = "half_diff";
  std::string larger = "larger";
  std::string smaller = "smaller";
};

struct ProductRatioIds {
  std::string y_squared = "y_squared";
  std::string y = "y";
  std::string x = "x";
};

/// larger, smaller = s/2 +- sqrt((s/2)^2 - p). The trace holds the givens
/// `sum` and `product` followed by half-sum, its square, the discriminant,
/// its root, and both combinations.
/// Throws NegativeDiscriminant or IrrationalRoot.
std::pair<PairSolution, Trace> solve_sum_product(const SumProductProblem& prob);

/// Appends the completing-the-square steps to trace, reading s and p from the
/// existing steps sum_id and product_id.
PairSolution solve_sum_product_into(Trace& trace, const std::string& sum_id,
                                    const std::string& product_id,
                                    const SumProductIds& ids = {});

struct ProductRatioSolution {
  SexValue x;
  SexValue y;

  friend bool operator==(const ProductRatioSolution&, const ProductRatioSolution&) = default;
};

/// y = sqrt(p / k), x = k * y. Throws IrrationalRoot.
ProductRatioSolution solve_product_ratio(const SexValue& p, const RatioConstraint& k);

/// Trace-producing form: y_squared = p / k, y = sqrt(y_squared), x = y * k.
ProductRatioSolution solve_product_ratio_into(Trace& trace, const std::string& product_id,
                                              const std::string& ratio_id,
                                              const ProductRatioIds& ids = {});

}  // namespace babylon
