#include <doctest.h>

#include <optional>

#include "babylon/error.hpp"
#include "babylon/sumprod.hpp"
#include "test_support.hpp"

using namespace babylon;
using babylon::testing::Gen;
using babylon::testing::rat;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected babylon::Error");
  return ErrorKind::InvalidArgument;
}

// Enumerates integer pairs a >= b >= 0 with a + b = s.
std::optional<std::pair<std::uint64_t, std::uint64_t>> brute_force_pair(std::uint64_t s, std::uint64_t p) {
  for (std::uint64_t b = 0; 2 * b <= s; ++b) {
    if ((s - b) * b == p) return std::pair{s - b, b};
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("tablet sum and product") {
  const auto [sol, trace] = solve_sum_product({parse_sexagesimal("49,12"), parse_sexagesimal("6,54,43,12")});
  CHECK(sol.larger == rat(2304));
  CHECK(sol.smaller == rat(648));
  CHECK(to_sexagesimal(sol.larger) == "38,24");
  CHECK(to_sexagesimal(sol.smaller) == "10,48");

  CHECK(trace.value("half_sum") == parse_sexagesimal("24,36"));
  CHECK(trace.value("half_sum_sq") == parse_sexagesimal("10,5,9,36"));
  CHECK(trace.value("discriminant") == parse_sexagesimal("3,10,26,24"));
  CHECK(trace.value("half_diff") == parse_sexagesimal("13,48"));

  std::vector<std::string> ids;
  for (const auto& s : trace.steps()) ids.push_back(s.id);
  CHECK(ids == std::vector<std::string>{"sum", "product", "half_sum", "half_sum_sq", "discriminant", "half_diff",
                                        "larger", "smaller"});
  CHECK(check_integrity(trace).empty());
}

TEST_CASE("small sum and product instances") {
  CHECK(solve_sum_product({rat(2), rat(1)}).first == PairSolution{rat(1), rat(1)});

  const auto oracle = brute_force_pair(5, 6);
  REQUIRE(oracle);
  CHECK(solve_sum_product({rat(5), rat(6)}).first == PairSolution{rat(oracle->first), rat(oracle->second)});

  CHECK(kind_of([] { solve_sum_product({rat(1), rat(1)}); }) == ErrorKind::NegativeDiscriminant);
  CHECK(kind_of([] { solve_sum_product({rat(3), rat(1)}); }) == ErrorKind::IrrationalRoot);
  CHECK(solve_sum_product({rat(0), rat(0)}).first == PairSolution{rat(0), rat(0)});
}

TEST_CASE("sum and product agree with enumeration") {
  for (std::uint64_t s = 0; s <= 40; ++s) {
    for (std::uint64_t p = 0; p <= 400; ++p) {
      CAPTURE(s);
      CAPTURE(p);
      const auto oracle = brute_force_pair(s, p);
      if (oracle) {
        CHECK(solve_sum_product({rat(s), rat(p)}).first == PairSolution{rat(oracle->first), rat(oracle->second)});
      } else if (s * s < 4 * p) {
        CHECK(kind_of([&] { solve_sum_product({rat(s), rat(p)}); }) == ErrorKind::NegativeDiscriminant);
      }
    }
  }
}

TEST_CASE("sum and product roundtrip") {
  Gen g(1001);
  for (int i = 0; i < 300; ++i) {
    SexValue a = g.nonneg();
    SexValue b = g.nonneg();
    if (a < b) std::swap(a, b);
    const auto [sol, trace] = solve_sum_product({a + b, a * b});
    CHECK(sol.larger == a);
    CHECK(sol.smaller == b);
    CHECK(sol.larger >= sol.smaller);
    CHECK(check_integrity(trace).empty());
  }
}

TEST_CASE("product with ratio") {
  const auto tablet = solve_product_ratio(rat(600), RatioConstraint(rat(2, 3)));
  CHECK(tablet.x == rat(20));
  CHECK(tablet.y == rat(30));

  CHECK(solve_product_ratio(rat(0), RatioConstraint(rat(5))) == ProductRatioSolution{rat(0), rat(0)});
  CHECK(solve_product_ratio(rat(72), RatioConstraint(rat(2))) == ProductRatioSolution{rat(12), rat(6)});

  CHECK(kind_of([] { solve_product_ratio(rat(2), RatioConstraint(rat(1))); }) == ErrorKind::IrrationalRoot);
  CHECK(kind_of([] { RatioConstraint(rat(0)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("product with ratio roundtrip") {
  Gen g(2002);
  for (int i = 0; i < 300; ++i) {
    const SexValue y = g.positive();
    const SexValue k = g.positive();
    const auto sol = solve_product_ratio(k * y * y, RatioConstraint(k));
    CHECK(sol.y == y);
    CHECK(sol.x == k * y);
    CHECK(sol.x * sol.y == k * y * y);
  }
}

TEST_CASE("trace-producing product with ratio") {
  Trace t;
  t.record("p", Expression::given(rat(600)));
  t.record("k", Expression::given(parse_sexagesimal("0;40")));
  const auto sol = solve_product_ratio_into(t, "p", "k");
  CHECK(t.value("y_squared") == parse_sexagesimal("15,0"));
  CHECK(sol.y == rat(30));
  CHECK(sol.x == rat(20));
  CHECK(check_integrity(t).empty());
}
