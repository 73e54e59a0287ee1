#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rds/imquad.hpp"
#include "rds/planeset.hpp"
#include "rds/trivariate.hpp"

namespace rds {

/// Projective plane curve f(x, y, z) = 0 over Q, in lattice coordinates
/// (x, yc). Irreducibility is the caller's claim and is not checked.
class PlaneCurve {
 public:
  /// Throws Error{invalid_argument} unless f is nonzero and homogeneous of degree d >= 1.
  PlaneCurve(TriPoly f, int degree);

  /// Degree is inferred from f.
  explicit PlaneCurve(TriPoly f);

  const TriPoly& poly() const { return f_; }
  int degree() const { return degree_; }

  Rational evaluate(const LatticePoint& p) const { return f_.evaluate(p.x, p.yc, 1); }
  bool contains(const LatticePoint& p) const { return evaluate(p).is_zero(); }
  /// True when some partial derivative is nonzero at (x, yc, 1). Meaningful
  /// for points on the curve.
  bool smooth_at(const LatticePoint& p) const;

  friend bool operator==(const PlaneCurve&, const PlaneCurve&) = default;

 private:
  TriPoly f_;
  int degree_;
};

/// One of the two complex lines through `base` and a circular point at
/// infinity: (x - a z) + s*w*(y - b z) = 0 with w^2 = -k and s = +1, or s = -1
/// for the conjugate line. Parametrized as (a - s*w*t, b + t, 1).
struct IsotropicLine {
  LatticePoint base;
  std::int64_t k = 1;
  bool conjugate = false;

  ImQuadElement sign() const { return ImQuadElement(k, conjugate ? -1 : 1); }
  /// Affine point at parameter t.
  std::array<ImQuadElement, 2> point_at(const ImQuadElement& t) const;
  /// Parameter on this line of its intersection with `other`; nullopt when
  /// the lines meet only at infinity. Identical lines raise Error{invalid_argument}.
  std::optional<ImQuadElement> meet_parameter(const IsotropicLine& other) const;

  friend bool operator==(const IsotropicLine&, const IsotropicLine&) = default;
};

/// Point-count threshold for a degree-d curve: d(d-1) + 5d/2 + 1 points of
/// the set on the curve for d >= 3, and 5 points off the curve for d = 1.
/// d = 2 raises Error{use_inversion_first}; d < 1 raises Error{domain}.
Rational threshold(int d);

/// p(t) = f(a - s*w*t, b + t, 1).
ImQuadPoly substitute_line(const PlaneCurve& curve, const IsotropicLine& line);

struct MultiplicityCount {
  int multiplicity;
  int degree;  // total degree of the factors carrying this multiplicity

  friend bool operator==(const MultiplicityCount&, const MultiplicityCount&) = default;
};

/// Intersection of a curve with one isotropic line.
///
/// `simple_roots` counts affine intersection points of multiplicity one that
/// are not shared with any line in the exclusion set. Such points are
/// automatically smooth points of the curve. `degree_drop` is the
/// intersection multiplicity at the circular point; the multiplicity mu of
/// the curve there satisfies mu_lower_bound <= mu <= mu_upper_bound.
struct TransversalityReport {
  int simple_roots = 0;
  int excluded_roots = 0;
  std::vector<MultiplicityCount> multiplicities;
  int degree_drop = 0;
  int mu_lower_bound = 0;
  int mu_upper_bound = 0;
};

/// Throws Error{line_is_component} when p(t) vanishes identically.
TransversalityReport transversality_report(const PlaneCurve& curve, const IsotropicLine& line,
                                           std::span<const IsotropicLine> exclusions = {});

/// The six lines l_P, conj(l_P) for each point of a triple.
std::vector<IsotropicLine> six_lines(std::span<const LatticePoint> triple, std::int64_t k);

struct UnionTransversality {
  int transverse_points = 0;
  std::vector<TransversalityReport> per_line;
};

/// Transverse points of the curve with a union of lines: per line, simple
/// roots that no other line of the union passes through.
UnionTransversality union_transversality(const PlaneCurve& curve, std::span<const IsotropicLine> lines);

/// Euclidean reflection of `p` in a degree-1 curve. With rational lattice
/// coordinates the image is always in the lattice.
LatticePoint reflection_across_line(const LatticePoint& p, const PlaneCurve& line, std::int64_t k);

struct TripleSelection {
  std::array<std::size_t, 3> indices{};
  std::array<LatticePoint, 3> points{};
  int transverse_points = 0;
  int required = 0;
  std::vector<std::string> transcript;
};

/// Greedy triple selection. For d = 1 the candidates are the points off the
/// line and each pick avoids earlier picks and their reflections. For d >= 3
/// the candidates are the points on the curve; the good set G holds those
/// whose line meets the curve with a squarefree p(t) and minimal degree drop,
/// and P2, P3 are chosen so that their conjugate lines avoid the earlier
/// delta sets. The result is re-verified on all six lines.
///
/// Errors: Error{use_inversion_first} for d = 2, Error{precondition} when
/// there are too few candidates, Error{hypothesis_violation} naming the step
/// that failed otherwise.
TripleSelection choose_transverse_triple(const PlaneCurve& curve, const Configuration& candidates);

}  // namespace rds
