#include "babylon/geometry.hpp"

#include <algorithm>

#include "babylon/error.hpp"

namespace babylon::geometry {

namespace {

struct Vec {
  Coord x;
  Coord y;
};

Vec operator-(const RatPoint& a, const RatPoint& b) { return {a.x - b.x, a.y - b.y}; }
Coord dot(const Vec& u, const Vec& v) { return u.x * v.x + u.y * v.y; }
Coord cross(const Vec& u, const Vec& v) { return u.x * v.y - u.y * v.x; }
Coord norm2(const Vec& u) { return dot(u, u); }

int sign(const Coord& c) { return c > 0 ? 1 : (c < 0 ? -1 : 0); }

std::array<Coord, 3> opposite_sides_sq(const TriangleDef& t) {
  return {squared_distance(t[1], t[2]), squared_distance(t[2], t[0]), squared_distance(t[0], t[1])};
}

void require_permutation(const VertexCorrespondence& corr) {
  std::array<bool, 3> seen{};
  for (auto i : corr) {
    if (i > 2 || seen[i]) throw Error(ErrorKind::InvalidArgument, "vertex correspondence is not a permutation");
    seen[i] = true;
  }
}

[[noreturn]] void invalid_config(const std::string& why) { throw Error(ErrorKind::InvalidConfig, why); }

}  // namespace

Coord orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c) { return cross(b - a, c - a); }

Coord squared_distance(const RatPoint& a, const RatPoint& b) { return norm2(a - b); }

TriangleDef::TriangleDef(RatPoint p1, RatPoint p2, RatPoint p3)
    : vertices_{std::move(p1), std::move(p2), std::move(p3)} {
  if (orientation(vertices_[0], vertices_[1], vertices_[2]) == 0) {
    throw Error(ErrorKind::DegenerateTriangle, "triangle vertices are collinear");
  }
}

std::optional<SexValue> similar_sss(const TriangleDef& t1, const TriangleDef& t2,
                                    const VertexCorrespondence& corr) {
  require_permutation(corr);
  const auto s1 = opposite_sides_sq(t1);
  const auto s2 = opposite_sides_sq(t2);
  const Coord k2 = s1[0] / s2[corr[0]];
  for (std::size_t i = 1; i < 3; ++i) {
    if (s1[i] != k2 * s2[corr[i]]) return std::nullopt;
  }
  return SexValue::from_rational(k2);
}

std::optional<SexValue> similar_sss(const TriangleDef& t1, const TriangleDef& t2) {
  VertexCorrespondence corr = kIdentityCorrespondence;
  do {
    if (auto k2 = similar_sss(t1, t2, corr)) return k2;
  } while (std::next_permutation(corr.begin(), corr.end()));
  return std::nullopt;
}

bool similar_sas(const TriangleDef& t1, const TriangleDef& t2, const VertexCorrespondence& corr,
                 std::size_t apex) {
  require_permutation(corr);
  if (apex > 2) throw Error(ErrorKind::InvalidArgument, "apex index out of range");
  const std::size_t j = (apex + 1) % 3;
  const std::size_t k = (apex + 2) % 3;

  const Vec u1 = t1[j] - t1[apex];
  const Vec v1 = t1[k] - t1[apex];
  const Vec u2 = t2[corr[j]] - t2[corr[apex]];
  const Vec v2 = t2[corr[k]] - t2[corr[apex]];
  const Coord nu1 = norm2(u1), nv1 = norm2(v1), nu2 = norm2(u2), nv2 = norm2(v2);

  // |u1|/|u2| = |v1|/|v2|
  if (nu1 * nv2 != nv1 * nu2) return false;

  // cos^2 equal and cos of the same sign
  const Coord d1 = dot(u1, v1);
  const Coord d2 = dot(u2, v2);
  if (sign(d1) != sign(d2)) return false;
  return d1 * d1 * nu2 * nv2 == d2 * d2 * nu1 * nv1;
}

InterceptResult check_intercept(const InterceptConfig& cfg) {
  const auto& [o, a, b, c, d] = cfg;
  for (const RatPoint* p : {&a, &b, &c, &d}) {
    if (*p == o) invalid_config("a line point coincides with the apex O");
  }
  if (orientation(o, a, b) != 0) invalid_config("O, A, B are not collinear");
  if (orientation(o, c, d) != 0) invalid_config("O, C, D are not collinear");
  if (orientation(o, a, c) == 0) invalid_config("L1 and L2 coincide");
  if (a == b || c == d) invalid_config("the two parallels coincide");
  const Vec ac = c - a;
  if (cross(ac, d - b) != 0) invalid_config("AC is not parallel to BD");

  InterceptResult r;
  const Coord oa_ob = squared_distance(o, a) / squared_distance(o, b);
  const Coord oc_od = squared_distance(o, c) / squared_distance(o, d);
  const Coord ac_bd = norm2(ac) / squared_distance(b, d);
  r.holds = oa_ob == oc_od && oc_od == ac_bd;
  r.ratio_squared = SexValue::from_rational(oa_ob);

  // O is between the parallels iff it lies on opposite sides of them.
  const int side_a = sign(cross(ac, o - a));
  const int side_b = sign(cross(ac, o - b));
  r.position = side_a * side_b < 0 ? ApexPosition::apex_between : ApexPosition::apex_outside;
  return r;
}

SexValue intercept_fourth(const SexValue& a, const SexValue& b, const SexValue& c) { return a * c / b; }

SexValue transversal_w(const SexValue& x, const SexValue& y, const SexValue& z) {
  if (x.is_zero() || y.is_zero() || z.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "transversal_w needs x, y, z > 0");
  }
  return z * y / (x + y);
}

TrapezoidSpec::TrapezoidSpec(SexValue a, SexValue b, SexValue h)
    : a_(std::move(a)), b_(std::move(b)), h_(std::move(h)) {
  if (!(a_ > b_) || b_.is_zero() || h_.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "trapezoid needs a > b > 0 and h > 0, got a=" + a_.to_string() +
                                                " b=" + b_.to_string() + " h=" + h_.to_string());
  }
}

SexValue TrapezoidSpec::area() const { return h_ * (a_ + b_) / SexValue{2}; }

SexValue trapezoid_bisector_sq(const TrapezoidSpec& spec) {
  return (spec.a() * spec.a() + spec.b() * spec.b()) / SexValue{2};
}

SexValue trapezoid_bisector(const TrapezoidSpec& spec) { return sqrt_exact(trapezoid_bisector_sq(spec)); }

TrapezoidBisection bisect_trapezoid(const TrapezoidSpec& spec) {
  const SexValue d_sq = trapezoid_bisector_sq(spec);
  const SexValue denom = SexValue{2} * (spec.a() - spec.b());
  return {d_sq, spec.h() * (d_sq - spec.b() * spec.b()) / denom,
          spec.h() * (spec.a() * spec.a() - d_sq) / denom};
}

bool is_transversal(std::span<const RatPoint> polygon, const RatPoint& p, const RatPoint& q) {
  const std::size_t n = polygon.size();
  if (n < 3) throw Error(ErrorKind::DegeneratePolygon, "polygon needs at least three vertices");
  // Every other vertex strictly left of every edge; rules out reflex and
  // collinear vertices as well as self-intersecting (star) orderings.
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& from = polygon[i];
    const RatPoint& to = polygon[(i + 1) % n];
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == (i + 1) % n) continue;
      if (orientation(from, to, polygon[k]) <= 0) {
        throw Error(ErrorKind::DegeneratePolygon, "polygon is not strictly convex counter-clockwise");
      }
    }
  }
  if (p == q) throw Error(ErrorKind::InvalidArgument, "line needs two distinct points");

  bool left = false;
  bool right = false;
  for (const auto& v : polygon) {
    const int s = sign(orientation(p, q, v));
    left = left || s > 0;
    right = right || s < 0;
  }
  return left && right;
}

}  // namespace babylon::geometry
