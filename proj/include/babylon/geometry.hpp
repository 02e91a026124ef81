#pragma once

// Exact plane geometry over rational coordinates: similarity of triangles,
// the intercept theorem, transversals of convex polygons and the
// area-bisecting transversal of a trapezoid.
//
// Angles are never materialized. Angle equality is tested through
// dot products (equal cos^2 with the same sign) and distances are compared
// squared, so every predicate is exact.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "babylon/sexnum.hpp"

namespace babylon::geometry {

/// Signed coordinate. Signed values are confined to this namespace.
using Coord = Rational;

struct RatPoint {
  Coord x;
  Coord y;

  friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

/// Twice the signed area of (a, b, c); positive for a counter-clockwise turn.
Coord orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c);

Coord squared_distance(const RatPoint& a, const RatPoint& b);

class TriangleDef {
 public:
  /// Throws DegenerateTriangle when the vertices are collinear.
  TriangleDef(RatPoint p1, RatPoint p2, RatPoint p3);

  const RatPoint& operator[](std::size_t i) const { return vertices_.at(i); }
  const std::array<RatPoint, 3>& vertices() const noexcept { return vertices_; }

 private:
  std::array<RatPoint, 3> vertices_;
};

/// corr[i] is the vertex of the second triangle matched with vertex i of the
/// first. Must be a permutation of {0, 1, 2}.
using VertexCorrespondence = std::array<std::size_t, 3>;

inline constexpr VertexCorrespondence kIdentityCorrespondence{0, 1, 2};

/// Side-side-side criterion. Returns k^2, the squared ratio of similarity
/// (sides of t1 over sides of t2), for the first vertex correspondence under
/// which all three squared side ratios agree; nullopt if none does.
std::optional<SexValue> similar_sss(const TriangleDef& t1, const TriangleDef& t2);

/// Same as similar_sss restricted to one correspondence.
std::optional<SexValue> similar_sss(const TriangleDef& t1, const TriangleDef& t2,
                                    const VertexCorrespondence& corr);

/// Side-angle-side criterion at vertex `apex` of t1 (matched to corr[apex]):
/// the two adjacent squared side ratios agree and the included angles are
/// equal. Throws InvalidArgument for a bad correspondence.
bool similar_sas(const TriangleDef& t1, const TriangleDef& t2, const VertexCorrespondence& corr,
                 std::size_t apex = 0);

/// Lines L1 = (o, a, b) and L2 = (o, c, d) cut by the parallels AC and BD.
struct InterceptConfig {
  RatPoint o;
  RatPoint a;
  RatPoint b;
  RatPoint c;
  RatPoint d;
};

enum class ApexPosition {
  apex_outside,  // O is not between the parallels
  apex_between,  // O lies strictly between the parallels
};

struct InterceptResult {
  ApexPosition position = ApexPosition::apex_outside;
  SexValue ratio_squared;  // OA^2 / OB^2
  bool holds = false;      // OA^2/OB^2 = OC^2/OD^2 = AC^2/BD^2
};

/// Throws InvalidConfig when the collinearity or parallelism preconditions
/// fail, when L1 = L2, when a point coincides with O, or when the two
/// parallels coincide.
InterceptResult check_intercept(const InterceptConfig& cfg);

/// The unreachable length x = a*c/b from three measured ones.
/// Throws DivisionByZero for b = 0.
SexValue intercept_fourth(const SexValue& a, const SexValue& b, const SexValue& c);

/// Right triangle cut by a transversal parallel to its width z, with x the
/// upper length, y the lower length and w the transversal. Similar triangles
/// give x / (z - w) = y / w, hence w = z*y / (x + y).
/// Throws InvalidArgument unless x, y, z > 0.
SexValue transversal_w(const SexValue& x, const SexValue& y, const SexValue& z);

/// Trapezoid with parallel bases a > b > 0 and height h > 0.
class TrapezoidSpec {
 public:
  /// Throws InvalidArgument when a > b > 0 and h > 0 do not hold.
  TrapezoidSpec(SexValue a, SexValue b, SexValue h);

  const SexValue& a() const noexcept { return a_; }
  const SexValue& b() const noexcept { return b_; }
  const SexValue& h() const noexcept { return h_; }

  SexValue area() const;

 private:
  SexValue a_;
  SexValue b_;
  SexValue h_;
};

/// d^2 = (a^2 + b^2) / 2 for the transversal parallel to the bases that
/// halves the area.
SexValue trapezoid_bisector_sq(const TrapezoidSpec& spec);

/// d itself; throws NotAPerfectSquare when d is irrational.
SexValue trapezoid_bisector(const TrapezoidSpec& spec);

struct TrapezoidBisection {
  SexValue d_sq;
  SexValue upper_area;  // between the short base b and the transversal
  SexValue lower_area;  // between the transversal and the long base a
};

/// Length varies linearly with height, so the part between b and d has
/// height h(d - b)/(a - b) and area h(d^2 - b^2) / (2(a - b)); likewise
/// the other part. Both are rational in d^2.
TrapezoidBisection bisect_trapezoid(const TrapezoidSpec& spec);

/// True iff the infinite line through p and q cuts the strictly convex,
/// counter-clockwise polygon into two parts of positive area.
/// Throws DegeneratePolygon for fewer than three vertices or a polygon that is
/// not strictly convex CCW, and InvalidArgument for p == q.
bool is_transversal(std::span<const RatPoint> polygon, const RatPoint& p, const RatPoint& q);

}  // namespace babylon::geometry
