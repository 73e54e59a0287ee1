#include "rds/curvelift.hpp"

#include <algorithm>

#include "rds/error.hpp"

namespace rds {

namespace {

std::string point_str(const LatticePoint& p) { return "(" + p.x.str() + ", " + p.yc.str() + ")"; }

bool all_simple(const std::vector<SquarefreeFactor>& factors) {
  return std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.multiplicity == 1; });
}

}  // namespace

PlaneCurve::PlaneCurve(TriPoly f, int degree) : f_(std::move(f)), degree_(degree) {
  if (degree < 1) throw Error(Errc::invalid_argument, "plane curve degree must be at least 1");
  if (!f_.is_homogeneous(degree)) {
    throw Error(Errc::invalid_argument, "curve polynomial " + f_.str() + " is not homogeneous of degree " +
                                            std::to_string(degree));
  }
}

PlaneCurve::PlaneCurve(TriPoly f) : PlaneCurve(f, f.total_degree()) {}

bool PlaneCurve::smooth_at(const LatticePoint& p) const {
  for (int v = 0; v < 3; ++v) {
    if (!f_.partial(v).evaluate(p.x, p.yc, 1).is_zero()) return true;
  }
  return false;
}

std::array<ImQuadElement, 2> IsotropicLine::point_at(const ImQuadElement& t) const {
  const ImQuadElement w = ImQuadElement::omega(k);
  return {ImQuadElement(k, base.x) - sign() * w * t, ImQuadElement(k, base.yc) + t};
}

std::optional<ImQuadElement> IsotropicLine::meet_parameter(const IsotropicLine& other) const {
  if (other.k != k) throw Error(Errc::domain, "isotropic lines over different fields");
  const ImQuadElement w = ImQuadElement::omega(k);
  // Substituting this line into the other's equation gives
  //   (a - a') + s' w (b - b') + (s' - s) w t.
  const ImQuadElement constant = ImQuadElement(k, base.x - other.base.x) + other.sign() * w * ImQuadElement(k, base.yc - other.base.yc);
  if (conjugate == other.conjugate) {
    if (constant.is_zero()) throw Error(Errc::invalid_argument, "identical isotropic lines");
    return std::nullopt;
  }
  const ImQuadElement slope = (other.sign() - sign()) * w;
  return -constant / slope;
}

Rational threshold(int d) {
  if (d < 1) throw Error(Errc::domain, "curve degree must be positive");
  if (d == 2) {
    throw Error(Errc::use_inversion_first,
                "use inversion first: invert at a point of the conic to obtain a line or a cubic");
  }
  if (d == 1) return 5;
  return Rational(d * (d - 1)) + Rational(5 * d, 2) + 1;
}

ImQuadPoly substitute_line(const PlaneCurve& curve, const IsotropicLine& line) {
  const std::int64_t k = line.k;
  const ImQuadElement w = ImQuadElement::omega(k);
  const ImQuadPoly x(k, {ImQuadElement(k, line.base.x), -(line.sign() * w)});
  const ImQuadPoly y(k, {ImQuadElement(k, line.base.yc), ImQuadElement(k, 1)});
  const ImQuadPoly z = ImQuadPoly::constant(ImQuadElement(k, 1));
  return curve.poly().substitute(x, y, z);
}

TransversalityReport transversality_report(const PlaneCurve& curve, const IsotropicLine& line,
                                           std::span<const IsotropicLine> exclusions) {
  const ImQuadPoly p = substitute_line(curve, line);
  if (p.is_zero()) {
    throw Error(Errc::line_is_component,
                "line is a component: the isotropic line through " + point_str(line.base) + " lies on the curve");
  }
  TransversalityReport r;
  r.degree_drop = curve.degree() - p.degree();
  r.mu_lower_bound = r.degree_drop > 0 ? 1 : 0;
  r.mu_upper_bound = std::min(r.degree_drop, curve.degree() / 2);

  const auto factors = squarefree_decomposition(p);
  std::vector<const ImQuadPoly*> simple;
  for (const auto& f : factors) {
    r.multiplicities.push_back({f.multiplicity, f.factor.degree()});
    if (f.multiplicity == 1) {
      r.simple_roots += f.factor.degree();
      simple.push_back(&f.factor);
    }
  }

  std::vector<ImQuadElement> shared;
  for (const auto& other : exclusions) {
    if (other == line) continue;
    auto t = line.meet_parameter(other);
    if (!t || std::find(shared.begin(), shared.end(), *t) != shared.end()) continue;
    shared.push_back(*t);
  }
  for (const auto& t : shared) {
    for (const ImQuadPoly* g : simple) {
      if (g->evaluate(t).is_zero()) {
        ++r.excluded_roots;
        break;
      }
    }
  }
  r.simple_roots -= r.excluded_roots;
  return r;
}

std::vector<IsotropicLine> six_lines(std::span<const LatticePoint> triple, std::int64_t k) {
  std::vector<IsotropicLine> out;
  for (const auto& p : triple) {
    out.push_back({p, k, false});
    out.push_back({p, k, true});
  }
  return out;
}

UnionTransversality union_transversality(const PlaneCurve& curve, std::span<const IsotropicLine> lines) {
  UnionTransversality u;
  for (const auto& line : lines) {
    u.per_line.push_back(transversality_report(curve, line, lines));
    u.transverse_points += u.per_line.back().simple_roots;
  }
  return u;
}

LatticePoint reflection_across_line(const LatticePoint& p, const PlaneCurve& line, std::int64_t k) {
  if (line.degree() != 1) throw Error(Errc::precondition, "reflection needs a curve of degree 1");
  const Rational a = line.poly().coefficient({1, 0, 0});
  const Rational b = line.poly().coefficient({0, 1, 0});
  const Rational c = line.poly().coefficient({0, 0, 1});
  if (a.is_zero() && b.is_zero()) throw Error(Errc::precondition, "the line at infinity has no reflection");
  // In real coordinates (x, yc*sqrt(k)) the normal is (a, b/sqrt(k)).
  const Rational kk(k);
  const Rational lambda = (a * p.x + b * p.yc + c) / (a * a + b * b / kk);
  return {p.x - 2 * lambda * a, p.yc - 2 * lambda * b / kk};
}

namespace {

struct GoodPoint {
  std::size_t index;
  IsotropicLine line;
  ImQuadPoly p;
};

TripleSelection select_for_line(const PlaneCurve& curve, const Configuration& cands, TripleSelection sel) {
  std::vector<std::size_t> off;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!curve.contains(cands.point(i))) off.push_back(i);
  }
  sel.transcript.push_back("d=1: " + std::to_string(off.size()) + " candidate points off the line, need 5");
  if (off.size() < 5) {
    throw Error(Errc::precondition, "need at least 5 points off the line, have " + std::to_string(off.size()));
  }
  std::vector<LatticePoint> excluded;
  for (std::size_t step = 0; step < 3; ++step) {
    auto pick = std::find_if(off.begin(), off.end(), [&](std::size_t i) {
      return std::find(excluded.begin(), excluded.end(), cands.point(i)) == excluded.end();
    });
    if (pick == off.end()) {
      throw Error(Errc::hypothesis_violation,
                  "hypothesis violation at step P" + std::to_string(step + 1) + ": every candidate is excluded");
    }
    const LatticePoint& p = cands.point(*pick);
    const LatticePoint refl = reflection_across_line(p, curve, cands.k());
    sel.indices[step] = *pick;
    sel.points[step] = p;
    excluded.push_back(p);
    excluded.push_back(refl);
    sel.transcript.push_back("P" + std::to_string(step + 1) + " = #" + std::to_string(*pick) + " " + point_str(p) +
                             ", excluding its reflection " + point_str(refl));
  }
  return sel;
}

TripleSelection select_for_curve(const PlaneCurve& curve, const Configuration& cands, TripleSelection sel) {
  const int d = curve.degree();
  const std::int64_t k = cands.k();
  std::vector<std::size_t> on;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (curve.contains(cands.point(i))) on.push_back(i);
  }
  const Rational need = threshold(d);
  sel.transcript.push_back("d=" + std::to_string(d) + ": " + std::to_string(on.size()) +
                           " candidate points on the curve, need " + need.str());
  if (Rational(static_cast<long>(on.size())) < need) {
    throw Error(Errc::precondition, "need at least " + need.str() + " points on the curve, have " +
                                        std::to_string(on.size()));
  }

  struct Probe {
    std::size_t index;
    ImQuadPoly p;
    int drop;
    bool squarefree;
  };
  std::vector<Probe> probes;
  for (std::size_t i : on) {
    const IsotropicLine line{cands.point(i), k, false};
    ImQuadPoly p = substitute_line(curve, line);
    if (p.is_zero()) {
      sel.transcript.push_back("#" + std::to_string(i) + ": isotropic line is a component, skipped");
      continue;
    }
    const bool sqf = all_simple(squarefree_decomposition(p));
    const int drop = d - p.degree();
    probes.push_back({i, std::move(p), drop, sqf});
  }
  if (probes.empty()) throw Error(Errc::hypothesis_violation, "hypothesis violation: no usable candidate lines");

  // Only the lines tangent at the circular point have a drop above mu, and
  // each of them carries at most one real point, so the minimum drop is mu.
  const int mu = std::min_element(probes.begin(), probes.end(), [](const Probe& a, const Probe& b) {
                   return a.drop < b.drop;
                 })->drop;
  sel.transcript.push_back("multiplicity at the circular point: mu=" + std::to_string(mu));

  std::vector<GoodPoint> good;
  for (auto& pr : probes) {
    if (pr.squarefree && pr.drop == mu) {
      good.push_back({pr.index, IsotropicLine{cands.point(pr.index), k, false}, std::move(pr.p)});
    }
  }
  sel.transcript.push_back("good set G has " + std::to_string(good.size()) + " points");
  if (good.empty()) throw Error(Errc::hypothesis_violation, "hypothesis violation at step P1: G is empty");

  // The conjugate line of `g` meets the line of `earlier` at one affine point;
  // it must not be one of the curve points in delta(earlier).
  auto avoids_delta = [&](const GoodPoint& earlier, const GoodPoint& g) {
    const IsotropicLine conj{g.line.base, k, true};
    const auto t = earlier.line.meet_parameter(conj);
    if (!t) return true;
    return t->is_zero() || !earlier.p.evaluate(*t).is_zero();
  };

  const GoodPoint* p1 = &good.front();
  const GoodPoint* p2 = nullptr;
  const GoodPoint* p3 = nullptr;
  for (const auto& g : good) {
    if (&g != p1 && avoids_delta(*p1, g)) {
      p2 = &g;
      break;
    }
  }
  if (!p2) throw Error(Errc::hypothesis_violation, "hypothesis violation at step P2: no point of G avoids delta(P1)");
  for (const auto& g : good) {
    if (&g != p1 && &g != p2 && avoids_delta(*p1, g) && avoids_delta(*p2, g)) {
      p3 = &g;
      break;
    }
  }
  if (!p3) {
    throw Error(Errc::hypothesis_violation, "hypothesis violation at step P3: no point of G avoids delta(P1), delta(P2)");
  }
  const GoodPoint* chosen[3] = {p1, p2, p3};
  for (std::size_t s = 0; s < 3; ++s) {
    sel.indices[s] = chosen[s]->index;
    sel.points[s] = cands.point(chosen[s]->index);
    sel.transcript.push_back("P" + std::to_string(s + 1) + " = #" + std::to_string(chosen[s]->index) + " " +
                             point_str(sel.points[s]));
  }
  return sel;
}

}  // namespace

TripleSelection choose_transverse_triple(const PlaneCurve& curve, const Configuration& candidates) {
  const int d = curve.degree();
  threshold(d);  // rejects d = 2
  TripleSelection sel;
  sel = d == 1 ? select_for_line(curve, candidates, std::move(sel)) : select_for_curve(curve, candidates, std::move(sel));

  sel.required = std::max(3 * (d - 2), 6);
  const auto lines = six_lines(sel.points, candidates.k());
  const UnionTransversality u = union_transversality(curve, lines);
  sel.transverse_points = u.transverse_points;
  sel.transcript.push_back("verified: " + std::to_string(u.transverse_points) + " transverse points on six lines, need " +
                           std::to_string(sel.required));
  if (sel.transverse_points < sel.required) {
    throw Error(Errc::hypothesis_violation, "hypothesis violation at verification: only " +
                                                std::to_string(sel.transverse_points) + " transverse points, need " +
                                                std::to_string(sel.required));
  }
  return sel;
}

}  // namespace rds
