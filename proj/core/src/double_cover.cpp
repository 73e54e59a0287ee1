#include "rds/double_cover.hpp"

#include <optional>
#include <vector>

#include "rds/error.hpp"

namespace rds {

TriPoly isotropic_quadric(const LatticePoint& p, std::int64_t k) {
  const TriPoly u = TriPoly::x() - TriPoly::z() * p.x;
  const TriPoly v = TriPoly::y() - TriPoly::z() * p.yc;
  return u * u + v * v * Rational(k);
}

namespace {

// Ramification count when every intersection point is affine and on a single
// line: the number of distinct roots of odd multiplicity over the six lines.
std::optional<long> exact_ramification(const PlaneCurve& curve, const std::vector<IsotropicLine>& lines,
                                       std::string& why_not) {
  long r = 0;
  for (const auto& line : lines) {
    const ImQuadPoly p = substitute_line(curve, line);
    if (p.is_zero()) {
      why_not = "an isotropic line is a component of the curve";
      return std::nullopt;
    }
    if (p.degree() != curve.degree()) {
      why_not = "the curve passes through a circular point at infinity";
      return std::nullopt;
    }
    for (const auto& other : lines) {
      if (other == line) continue;
      const auto t = line.meet_parameter(other);
      if (t && p.evaluate(*t).is_zero()) {
        why_not = "an intersection point lies on two of the six lines";
        return std::nullopt;
      }
    }
    for (const auto& f : squarefree_decomposition(p)) {
      if (f.multiplicity % 2 == 1) r += f.factor.degree();
    }
  }
  return r;
}

}  // namespace

DoubleCoverCurve build_double_cover(const PlaneCurve& curve, const std::array<LatticePoint, 3>& triple,
                                    std::int64_t k) {
  const int d = curve.degree();
  threshold(d);  // rejects d = 2

  DoubleCoverCurve out{curve, triple, k, {}, {}, {}, -1, {}};
  out.branch = isotropic_quadric(triple[0], k) * isotropic_quadric(triple[1], k) * isotropic_quadric(triple[2], k);

  const long dl = d;
  out.ramification = {6, 6 * dl};
  out.genus = {2, dl * dl + 1};

  // Global smoothness is only certified for lines.
  if (d != 1) {
    out.note = "smoothness of a degree " + std::to_string(d) + " curve is not certified; reporting bounds";
    return out;
  }
  const auto lines = six_lines(triple, k);
  std::string why_not;
  const auto r = exact_ramification(curve, lines, why_not);
  if (!r) {
    out.note = why_not + "; reporting bounds";
    return out;
  }
  if (*r % 2 != 0) throw Error(Errc::hypothesis_violation, "odd ramification count " + std::to_string(*r));
  out.base_genus = (dl - 1) * (dl - 2) / 2;
  out.ramification = {*r, *r};
  const long g = 2 * out.base_genus - 1 + *r / 2;
  out.genus = {g, g};
  out.note = "exact";
  return out;
}

}  // namespace rds
