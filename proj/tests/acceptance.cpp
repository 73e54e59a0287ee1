// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"

using namespace rds;
using namespace rds::test;

namespace {

struct Check {
  std::string why;
  void require(bool ok, const std::string& what) {
    if (!ok && why.empty()) why = what;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Integer pow2(unsigned e) { return Integer(1) << e; }

void certificates(Check& c) {
  const auto t0 = Clock::now();
  for (unsigned m = 4; m <= 16; ++m) {
    const auto cert = certify_m(m);
    const Integer sq((m - 3) * (m - 3));
    c.require(cert.lhs == Rational(Integer(sq * pow2(m))), "lhs at m=" + std::to_string(m));
    c.require(cert.rhs == Rational(Integer(2 * sq * pow2(m - 2))), "rhs at m=" + std::to_string(m));
    c.require(cert.rhs < cert.lhs && cert.verdict, "verdict at m=" + std::to_string(m));
  }
  const auto c3 = certify_m(3);
  c.require(!c3.verdict && c3.reason == "not ample", "m=3 must fail as not ample");
  c.require(seconds_since(t0) < 1.0, "runtime over 1 s");
}

void census(Check& c) {
  for (std::size_t m = 3; m <= 16; ++m) {
    const auto recs = singularity_census(default_system(m));
    const std::string at = " at m=" + std::to_string(m);
    c.require(Integer(static_cast<unsigned long>(recs.size())) == Integer(static_cast<unsigned long>(m)) * pow2(m - 1) + 2,
              "record count" + at);
    for (const auto& r : recs) {
      if (r.location.kind == SingularityLocation::Kind::infinity) {
        c.require(Integer(r.e) == pow2(m - 2) && r.a == Rational(3 - static_cast<long>(m)), "infinity record" + at);
      } else {
        c.require(r.e == 2 && r.a == Rational(0), "finite record" + at);
      }
    }
    if (m == 4) c.require(recs.size() == 34, "m=4 count");
  }
}

void genus(Check& c) {
  const PlaneCurve line(TriPoly::y(), 1);
  const auto pts = config(1, {P("0", "1"), P("1", "2"), P("3", "-1"), P("-2", "5"), P("5", "3")});
  const auto sel = choose_transverse_triple(line, pts);
  const auto cover = build_double_cover(line, sel.points, 1);
  c.require(cover.ramification == IntRange{6, 6}, "line ramification");
  c.require(cover.genus == IntRange{2, 2}, "line genus");

  // Smooth cubic y^2 z = x^3 + 17 z^3 with a triple whose lines need not be transverse.
  const PlaneCurve cubic(TriPoly::y() * TriPoly::y() * TriPoly::z() - TriPoly::x() * TriPoly::x() * TriPoly::x() -
                             TriPoly::constant(17) * TriPoly::z() * TriPoly::z() * TriPoly::z(),
                         3);
  const auto cc = build_double_cover(cubic, {P("-2", "3"), P("-1", "4"), P("2", "5")}, 1);
  if (!cc.genus.exact()) c.require(cc.genus == IntRange{2, 10}, "cubic genus interval");
  c.require(cc.genus.lo >= 2 && cc.genus.hi <= 10, "cubic genus bounds");
}

void lift_roundtrip(Check& c) {
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  auto roundtrip = [&](const QuadricSystem& sys, const LatticePoint& p) {
    const auto lifted = lift_point(p, sys);
    c.require(verify_on_surface(lifted, sys), "lift not on surface");
    c.require(project(lifted) == p, "projection mismatch");
    ++checked;
  };
  // Rectangles 3s x 4s: the corners and the centre are rationally equidistant from all corners.
  for (long s = 1; s <= 20; ++s) {
    const Rational sc(Integer(s), Integer(s % 3 + 1));
    const auto rect = Configuration(1, {{0, 0}, {3 * sc, 0}, {0, 4 * sc}, {3 * sc, 4 * sc}}, "rectangle");
    const auto sys = build_surface(rect, {0, 1, 2, 3});
    for (const auto& p : rect.points()) roundtrip(sys, p);
    roundtrip(sys, {3 * sc / 2, 2 * sc});
  }
  // Every point on the line of a collinear base.
  const auto sys = build_surface(generate_line_rds(4, {0, 1, 3, 7}), {0, 1, 2, 3});
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) roundtrip(sys, {random_rational(rng, 60, 11), 0});
  c.require(checked >= 100, "fewer than 100 points");
  c.require(seconds_since(t0) < 1.0, "runtime over 1 s");
}

void inversion(Check& c) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& fixture : {generate_line_rds(n), generate_circle_rds(n)}) {
      for (std::size_t center = 0; center < n; ++center) {
        const auto once = invert(fixture, center);
        c.require(verify_rds(once).is_rds, "image not RDS");
        c.require(invert(once, center) == fixture, "double inversion differs");
      }
    }
  }
}

void embedding(Check& c) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 3 + i % 5;
    const auto fixture = i % 2 ? random_sqrt3_rds(rng, n) : random_rds(rng, n);
    const auto m = distance_matrix(fixture);
    const auto rebuilt = distance_matrix(embed_from_distances(m));
    // The embedding puts point 1 at distance 1 from point 0.
    const Rational scale = m.at(0, 1);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        c.require(rebuilt.at(a, b) * scale == m.at(a, b), "entry mismatch in fixture " + std::to_string(i));
  }
}

void transversality(Check& c) {
  const PlaneCurve line(TriPoly::y(), 1);
  const IsotropicLine l{P("0", "1"), 1, false};
  c.require(transversality_report(line, l).simple_roots == 1, "one simple root");
  const LatticePoint mirror = reflection_across_line(P("0", "1"), line, 1);
  c.require(mirror == P("0", "-1"), "reflection");
  const std::vector<IsotropicLine> with_mirror{l, {P("0", "1"), 1, true}, {mirror, 1, false}, {mirror, 1, true}};
  std::set<std::pair<std::string, std::string>> hits;
  for (const auto& li : with_mirror) {
    const auto p = substitute_line(line, li);
    const auto pt = li.point_at(-p.coefficient(0) / p.coefficient(1));
    hits.insert({pt[0].str(), pt[1].str()});
  }
  c.require(hits.size() == 2, "union should meet the line in two points");
  const IsotropicLine mirror_conj{mirror, 1, true};
  c.require(transversality_report(line, l, std::vector<IsotropicLine>{mirror_conj}).simple_roots == 0,
            "shared point still counted");
  const auto pts = config(1, {P("0", "1"), P("1", "2"), P("3", "-1"), P("-2", "5"), P("5", "3")});
  const auto sel = choose_transverse_triple(line, pts);
  c.require(sel.transverse_points == 6, "triple not everywhere transverse");
  c.require(union_transversality(line, six_lines(sel.points, 1)).transverse_points == 6, "recount");
}

void thresholds(Check& c) {
  c.require(threshold(1) == Rational(5), "d=1");
  c.require(threshold(3) == R("29/2"), "d=3");
  c.require(threshold(4) == Rational(23), "d=4");
  bool rejected = false;
  try {
    (void)threshold(2);
  } catch (const Error& e) {
    rejected = e.code() == Errc::use_inversion_first;
  }
  c.require(rejected, "d=2 accepted");
}

void search_soundness(Check& c) {
  const auto t0 = Clock::now();
  SearchSpec s;
  s.k = 1;
  s.numerator_bound = 4;
  s.denominator_bound = 1;
  s.target_size = 3;
  const auto serial = search(s);
  c.require(serial.complete(), "search incomplete");
  const auto oracle = brute_force_classes(s);
  std::set<Configuration, std::function<bool(const Configuration&, const Configuration&)>> canon(
      [](const Configuration& a, const Configuration& b) { return a.points() < b.points(); });
  for (const auto& o : oracle) canon.insert(canonical_form(o));
  c.require(canon.size() == oracle.size(), "oracle classes merge under canonical form");
  c.require(std::vector<Configuration>(canon.begin(), canon.end()) == serial.found, "found differs from oracle");
  for (const auto& f : serial.found) {
    bool seen = false;
    for (const auto& o : oracle) seen = seen || similar(o, f);
    c.require(seen, "found class missing from oracle");
  }
  const auto tri = canonical_form(config(1, {P("0", "0"), P("3", "0"), P("0", "4")}));
  c.require(std::find(serial.found.begin(), serial.found.end(), tri) != serial.found.end(), "3-4-5 missing");
  SearchOptions four;
  four.threads = 4;
  c.require(search(s, std::nullopt, four) == serial, "4 threads differ from serial");
  c.require(seconds_since(t0) < 30.0, "runtime over 30 s");
}

void audit_thresholds(Check& c) {
  const auto seven = config(1, {P("0", "0"), P("3", "0"), P("0", "4"), P("3", "4"), P("6", "8"), P("-5", "12"),
                                P("8", "-15")});
  const auto r = audit_general_position(seven);
  c.require(r.line_threshold == 3 && r.circle_threshold == 4, "7-point thresholds");
  for (std::size_t n = 4; n <= 12; ++n) {
    const auto a = audit_general_position(generate_circle_rds(n));
    c.require(!a.strong_ok && a.max_concyclic == n, "circle n=" + std::to_string(n));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"certificate suite", certificates}, {"census suite", census},
      {"genus check", genus},               {"lift roundtrip", lift_roundtrip},
      {"inversion property", inversion},    {"embedding oracle", embedding},
      {"transversality", transversality},   {"threshold values", thresholds},
      {"search soundness", search_soundness}, {"audit thresholds", audit_thresholds},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Check check;
    const auto t0 = Clock::now();
    try {
      fn(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    if (check.why.empty()) {
      std::printf("PASS %2d %s (%.3f s)\n", index, name, dt);
    } else {
      ++failures;
      std::printf("FAIL %2d %s (%.3f s): %s\n", index, name, dt, check.why.c_str());
    }
  }
  return failures == 0 ? 0 : 1;
}
