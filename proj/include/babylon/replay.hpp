#pragma once

// Replay of the solution procedure of Susa Mathematical Text No. 18.
//
// The tablet's unknowns are the upper length x, the lower length y, the
// width z and the transversal w of a right triangle cut by a line parallel
// to its width. Three givens constrain them:
//
//   x*y                          = p1   (10,0 on the tablet)
//   (x(z+w)/2) * (y*w/2)         = p2   (36,0,0): trapezoid area times triangle area
//   z^2 + w^2                    = p3   (20,24)
//
// and the similar triangles cut off by the transversal close the system with
// x / (z - w) = y / w.

#include <string>
#include <utility>
#include <vector>

#include "babylon/sexnum.hpp"
#include "babylon/trace.hpp"

namespace babylon {

struct Smt18Problem {
  SexValue p1;
  SexValue p2;
  SexValue p3;

  /// The values written on the tablet: 10,0; 36,0,0; 20,24.
  static Smt18Problem tablet();
};

struct Smt18Solution {
  SexValue x;  // upper length
  SexValue y;  // lower length
  SexValue z;  // width
  SexValue w;  // transversal

  friend bool operator==(const Smt18Solution&, const Smt18Solution&) = default;
};

/// Runs the scribe's procedure: eliminate x and y to get w(z+w), pass to
/// X = (z+w)^2 and Y = 2w^2 with known sum and product, complete the square,
/// recover w and z, then solve x*y = p1 with x = ((z-w)/w) * y.
///
/// Throws InvalidArgument for a zero given, IrrationalRoot,
/// NegativeDiscriminant, WidthNotGreaterThanTransversal when the recovered
/// z <= w, and InconsistentProblem when the result fails verify_solution.
std::pair<Smt18Solution, Trace> solve_smt18(const Smt18Problem& prob);

struct VerificationCheck {
  std::string name;
  bool passed = false;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool all_passed() const;
  std::string to_string() const;
};

/// Six checks: product_xy, area_product, sum_of_squares, proportion,
/// width_exceeds_transversal, geometry_transversal.
VerificationReport verify_solution(const Smt18Solution& sol, const Smt18Problem& prob);

/// The expected trace for the tablet instance, written out from the
/// tablet's legible values and the interpretation of its broken passages.
Trace canonical_trace();

/// Reads the four unknowns from the final steps of a replay trace.
Smt18Solution solution_from_trace(const Trace& trace);

}  // namespace babylon
