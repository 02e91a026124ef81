#pragma once

// Random generators and small oracles shared by the unit and acceptance tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "babylon/geometry.hpp"
#include "babylon/replay.hpp"
#include "babylon/sexnum.hpp"

namespace babylon::testing {

inline SexValue rat(std::uint64_t num, std::uint64_t den = 1) { return SexValue(BigInt(num), BigInt(den)); }

inline geometry::RatPoint pt(long long x, long long y) { return {geometry::Coord(x), geometry::Coord(y)}; }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  bool coin() { return integer(0, 1) == 1; }

  /// num / den with num in [0, max_num], den in [1, max_den].
  SexValue nonneg(std::int64_t max_num = 10'000, std::int64_t max_den = 10'000) {
    return SexValue(BigInt(integer(0, max_num)), BigInt(integer(1, max_den)));
  }

  SexValue positive(std::int64_t max_num = 10'000, std::int64_t max_den = 10'000) {
    return SexValue(BigInt(integer(1, max_num)), BigInt(integer(1, max_den)));
  }

  /// A value whose denominator is {2,3,5}-smooth, so it renders finitely.
  SexValue regular(std::int64_t max_num = 1'000'000) {
    BigInt den = 1;
    for (unsigned p : {2u, 3u, 5u}) {
      for (auto e = integer(0, 6); e > 0; --e) den *= p;
    }
    return SexValue(BigInt(integer(0, max_num)), den);
  }

  geometry::Coord coord(std::int64_t bound = 50, std::int64_t max_den = 6) {
    return geometry::Coord(BigInt(integer(-bound, bound)), BigInt(integer(1, max_den)));
  }

  geometry::RatPoint point(std::int64_t bound = 50, std::int64_t max_den = 6) {
    return {coord(bound, max_den), coord(bound, max_den)};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Trial-division oracle: true iff n >= 1 has no prime factor besides 2, 3, 5.
inline bool smooth_by_trial_division(BigInt n) {
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      if (p != 2 && p != 3 && p != 5) return false;
      while (n % p == 0) n /= p;
    }
  }
  return n == 1 || n == 2 || n == 3 || n == 5;
}

inline geometry::TriangleDef random_triangle(Gen& g, std::int64_t bound = 20) {
  while (true) {
    const auto a = pt(g.integer(-bound, bound), g.integer(-bound, bound));
    const auto b = pt(g.integer(-bound, bound), g.integer(-bound, bound));
    const auto c = pt(g.integer(-bound, bound), g.integer(-bound, bound));
    if (geometry::orientation(a, b, c) != 0) return {a, b, c};
  }
}

/// Rotation with rational cosine and sine from a Pythagorean triple.
struct RationalRotation {
  geometry::Coord cos;
  geometry::Coord sin;
};

inline RationalRotation pythagorean_rotation(Gen& g) {
  const auto m = g.integer(2, 12);
  const auto n = g.integer(1, m - 1);
  const geometry::Coord c(m * m + n * n);
  geometry::Coord cos = geometry::Coord(m * m - n * n) / c;
  geometry::Coord sin = geometry::Coord(2 * m * n) / c;
  if (g.coin()) std::swap(cos, sin);
  if (g.coin()) cos = -cos;
  if (g.coin()) sin = -sin;
  return {cos, sin};
}

struct SimilarPair {
  geometry::TriangleDef image;
  geometry::VertexCorrespondence corr;  // vertex i of the source maps to image vertex corr[i]
  SexValue k_squared;                   // source sides over image sides, squared
};

/// Image of t under scaling, rational rotation, optional reflection and
/// translation, with its vertices listed in a shuffled order.
inline SimilarPair similar_copy(const geometry::TriangleDef& t, Gen& g) {
  const auto rot = pythagorean_rotation(g);
  const geometry::Coord scale(BigInt(g.integer(1, 40)), BigInt(g.integer(1, 40)));
  const bool reflect = g.coin();
  const auto shift = g.point(30, 5);
  auto map = [&](const geometry::RatPoint& p) {
    const geometry::Coord x = reflect ? geometry::Coord(-p.x) : p.x;
    return geometry::RatPoint{scale * (rot.cos * x - rot.sin * p.y) + shift.x,
                              scale * (rot.sin * x + rot.cos * p.y) + shift.y};
  };
  geometry::VertexCorrespondence perm{0, 1, 2};
  std::shuffle(perm.begin(), perm.end(), g.engine());
  std::array<geometry::RatPoint, 3> image;
  for (std::size_t i = 0; i < 3; ++i) image[perm[i]] = map(t[i]);
  return {geometry::TriangleDef(image[0], image[1], image[2]), perm,
          SexValue::from_rational(1 / (scale * scale))};
}

/// Oracle: triangles are similar iff their sorted squared side lengths are
/// proportional.
inline bool similar_by_sorted_sides(const geometry::TriangleDef& t1, const geometry::TriangleDef& t2) {
  auto sides = [](const geometry::TriangleDef& t) {
    std::array<geometry::Coord, 3> s{geometry::squared_distance(t[0], t[1]), geometry::squared_distance(t[1], t[2]),
                                     geometry::squared_distance(t[2], t[0])};
    std::sort(s.begin(), s.end());
    return s;
  };
  const auto a = sides(t1);
  const auto b = sides(t2);
  return a[1] * b[0] == b[1] * a[0] && a[2] * b[0] == b[2] * a[0];
}

/// Two lines through o cut by parallels: b and d are chosen freely, then
/// a = o + lambda (b - o) and c = o + lambda (d - o).
inline geometry::InterceptConfig central_scaling_config(Gen& g, const geometry::Coord& lambda) {
  const auto o = g.point();
  geometry::RatPoint b, d;
  do {
    b = g.point();
    d = g.point();
  } while (b == o || d == o || geometry::orientation(o, b, d) == 0);
  auto scaled = [&](const geometry::RatPoint& p) {
    return geometry::RatPoint{o.x + lambda * (p.x - o.x), o.y + lambda * (p.y - o.y)};
  };
  return {o, scaled(b), b, scaled(d), d};
}

/// Random rational in [-bound, bound] other than 0 and 1.
inline geometry::Coord random_scale_factor(Gen& g, std::int64_t bound = 20) {
  while (true) {
    const geometry::Coord l(BigInt(g.integer(-bound * 12, bound * 12)), BigInt(g.integer(1, 12)));
    if (l != 0 && l != 1) return l;
  }
}

/// Builds givens from chosen unknowns: w < z, and x = t (z - w), y = t w so
/// the transversal proportion holds by construction.
inline Smt18Solution random_smt18_solution(Gen& g) {
  const SexValue w = g.positive(60, 12);
  const SexValue z = w + g.positive(60, 12);
  const SexValue t = g.positive(40, 12);
  return {t * (z - w), t * w, z, w};
}

inline Smt18Problem givens_of(const Smt18Solution& s) {
  const SexValue two{2};
  return {s.x * s.y, (s.x * (s.z + s.w) / two) * (s.y * s.w / two), s.z * s.z + s.w * s.w};
}

}  // namespace babylon::testing
