#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "rds/curvelift.hpp"

namespace rds {

/// q_P = (x - a z)^2 + k (y - b z)^2, the product of the two isotropic lines through P.
TriPoly isotropic_quadric(const LatticePoint& p, std::int64_t k);

/// Closed integer interval; exact values have lo == hi.
struct IntRange {
  long lo = 0;
  long hi = 0;
  bool exact() const { return lo == hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// The curve w^2 = q1 q2 q3, f = 0 in P(1,1,1,3) over a plane curve C.
///
/// `ramification` and `genus` are exact when every intersection of C with the
/// six lines is affine and lies on exactly one line, and C is known to be
/// smooth (always so for a line). Otherwise they hold the a priori bounds
/// [6, 6d] and [2, d^2 + 1].
struct DoubleCoverCurve {
  PlaneCurve base;
  std::array<LatticePoint, 3> triple;
  std::int64_t k = 1;
  TriPoly branch;  // q1 * q2 * q3, homogeneous of degree 6
  IntRange ramification;
  IntRange genus;
  long base_genus = -1;  // -1 when unknown
  std::string note;
};

DoubleCoverCurve build_double_cover(const PlaneCurve& curve, const std::array<LatticePoint, 3>& triple,
                                    std::int64_t k);

}  // namespace rds
