#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace rds;
using namespace rds::test;

namespace {

SearchSpec spec(std::int64_t k, long n, long d, std::size_t size, Requirement req = Requirement::any) {
  SearchSpec s;
  s.k = k;
  s.numerator_bound = n;
  s.denominator_bound = d;
  s.target_size = size;
  s.require = req;
  return s;
}

bool contains_similar(const std::vector<Configuration>& set, const Configuration& c) {
  return std::any_of(set.begin(), set.end(), [&](const Configuration& x) { return similar(x, c); });
}

}  // namespace

TEST(GenerateLine, Examples) {
  const auto c = generate_line_rds(3, {0, 1, 2});
  EXPECT_TRUE(verify_rds(c).is_rds);
  EXPECT_TRUE(collinear(c.point(0), c.point(1), c.point(2)));
  EXPECT_EQ(c.k(), 1);
  EXPECT_EQ(generate_line_rds(1).size(), 1u);
  for (std::size_t n = 3; n <= 9; ++n) EXPECT_EQ(audit_general_position(generate_line_rds(n)).max_collinear, n);
  EXPECT_THROW(generate_line_rds(3, {0, 1, 1}), Error);
  EXPECT_THROW(generate_line_rds(3, {0, 1}), Error);
  const auto f = generate_line_rds(3, {R("1/2"), R("-7/3"), 4});
  EXPECT_EQ(f.point(1), P("-7/3", "0"));
}

TEST(GenerateCircle, Examples) {
  const auto c = generate_circle_rds(2);
  EXPECT_EQ(c.point(0), P("1", "0"));
  EXPECT_EQ(c.point(1), P("-7/25", "24/25"));
  // Chord oracle: (32/25)^2 + (24/25)^2 = (8/5)^2.
  EXPECT_EQ(R("32/25").pow(2) + R("24/25").pow(2), R("8/5").pow(2));
  EXPECT_EQ(squared_distance(c.point(0), c.point(1), 1), R("64/25"));
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto g = generate_circle_rds(n);
    EXPECT_EQ(g.size(), n);
    EXPECT_TRUE(verify_rds(g).is_rds);
    for (const auto& p : g.points()) EXPECT_EQ(p.x * p.x + p.yc * p.yc, Rational(1));
    if (n >= 4) EXPECT_EQ(audit_general_position(g).max_concyclic, n);
  }
  EXPECT_THROW(generate_circle_rds(0), Error);
  try {
    generate_circle_rds(200000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("200000"), std::string::npos) << e.what();
  }
}

TEST(PrimitiveTriples, MatchBruteForce) {
  std::set<std::tuple<long, long, long>> oracle;
  for (long a = 1; a <= 100; ++a)
    for (long b = 1; b <= 100; ++b) {
      const auto c = isqrt_exact(static_cast<std::uint64_t>(a * a + b * b));
      if (!c || *c > 100 || a % 2 == 0) continue;
      if (std::gcd(a, b) == 1) oracle.insert({a, b, static_cast<long>(*c)});
    }
  std::set<std::tuple<long, long, long>> got;
  for (const auto& t : primitive_triples(100)) got.insert({t.a, t.b, t.c});
  EXPECT_EQ(got, oracle);
}

TEST(SearchSpec, Validation) {
  EXPECT_THROW(spec(1, 0, 1, 3).validate(), Error);
  EXPECT_THROW(spec(1, 1, 0, 3).validate(), Error);
  EXPECT_THROW(spec(1, 1, 1, 2).validate(), Error);
  EXPECT_THROW(spec(4, 1, 1, 3).validate(), Error);
  EXPECT_NO_THROW(spec(3, 1, 1, 3).validate());
  EXPECT_EQ(parse_requirement("strong_general_position"), Requirement::strong_general_position);
  EXPECT_THROW(parse_requirement("weird"), Error);
}

TEST(Search, FindsPythagoreanClass) {
  const auto s = spec(1, 4, 1, 3);
  const auto result = search(s);
  EXPECT_TRUE(result.complete());
  const auto tri = config(1, {P("0", "0"), P("3", "0"), P("0", "4")});
  EXPECT_TRUE(std::count(result.found.begin(), result.found.end(), canonical_form(tri)) == 1);
  EXPECT_TRUE(contains_similar(result.found, tri));
}

TEST(Search, MatchesUnprunedOracle) {
  for (const auto& s : {spec(1, 4, 1, 3), spec(1, 3, 1, 4), spec(1, 2, 2, 3), spec(3, 1, 2, 3)}) {
    const auto result = search(s);
    const auto oracle = brute_force_classes(s);
    EXPECT_EQ(result.found.size(), oracle.size());
    for (const auto& c : oracle) EXPECT_TRUE(contains_similar(result.found, c));
    for (const auto& c : result.found) EXPECT_TRUE(contains_similar(oracle, c));
  }
}

TEST(Search, EquilateralInSqrt3Lattice) {
  const auto result = search(spec(3, 2, 2, 3));
  const auto tri = config(3, {P("0", "0"), P("1", "0"), P("1/2", "1/2")});
  EXPECT_TRUE(contains_similar(result.found, tri));
}

TEST(Search, FoundAreRdsAndMeetRequirement) {
  for (auto req : {Requirement::any, Requirement::strong_general_position, Requirement::literal_general_position}) {
    const auto s = spec(1, 4, 1, 3, req);
    const auto result = search(s);
    for (const auto& c : result.found) {
      EXPECT_TRUE(verify_rds(c).is_rds);
      EXPECT_TRUE(meets_requirement(c, req));
      EXPECT_EQ(c.size(), 3u);
      EXPECT_EQ(canonical_form(c), c);
    }
    EXPECT_TRUE(std::is_sorted(result.found.begin(), result.found.end(), [](const auto& a, const auto& b) {
      return a.points() < b.points();
    }));
  }
}

TEST(Search, StrongExcludesCollinear) {
  const auto any = search(spec(1, 4, 1, 3));
  const auto strong = search(spec(1, 4, 1, 3, Requirement::strong_general_position));
  EXPECT_LT(strong.found.size(), any.found.size());
  EXPECT_TRUE(contains_similar(strong.found, config(1, {P("0", "0"), P("3", "0"), P("0", "4")})));
  std::size_t collinear_count = 0;
  for (const auto& c : any.found) {
    const bool line = collinear(c.point(0), c.point(1), c.point(2));
    collinear_count += line;
    EXPECT_EQ(std::count(strong.found.begin(), strong.found.end(), c) == 1, !line);
  }
  EXPECT_EQ(strong.found.size() + collinear_count, any.found.size());
}

TEST(CanonicalForm, InvariantUnderSimilarity) {
  std::mt19937_64 rng(44);
  const auto base = config(1, {P("0", "0"), P("3", "0"), P("0", "4"), P("3", "4")});
  const auto canon = canonical_form(base);
  EXPECT_EQ(canonical_form(canon), canon);
  for (int i = 0; i < 50; ++i) {
    auto pts = base.points();
    std::shuffle(pts.begin(), pts.end(), rng);
    const Rational s = random_rational(rng, 5, 5).abs() + R("1/7");
    const Rational tx = random_rational(rng, 5, 3), ty = random_rational(rng, 5, 3);
    const bool mirror = rng() % 2;
    // Rotation by the Pythagorean angle (3/5, 4/5) keeps the lattice for k = 1.
    const bool rotate = rng() % 2;
    for (auto& p : pts) {
      Rational x = p.x, y = mirror ? -p.yc : p.yc;
      if (rotate) {
        const Rational nx = x * R("3/5") - y * R("4/5");
        const Rational ny = x * R("4/5") + y * R("3/5");
        x = nx;
        y = ny;
      }
      p = {x * s + tx, y * s + ty};
    }
    EXPECT_EQ(canonical_form(config(1, pts)), canon);
  }
}

TEST(CanonicalForm, SeparatesDistinctShapes) {
  const auto a = canonical_form(config(1, {P("0", "0"), P("3", "0"), P("0", "4")}));
  const auto b = canonical_form(config(1, {P("0", "0"), P("5", "0"), P("0", "12")}));
  EXPECT_NE(a, b);
  const auto line1 = canonical_form(generate_line_rds(3, {0, 1, 2}));
  const auto line2 = canonical_form(generate_line_rds(3, {0, 1, 3}));
  EXPECT_NE(line1, line2);
  EXPECT_EQ(canonical_form(generate_line_rds(3, {5, 7, 9})), line1);
}

TEST(Search, ParallelEqualsSerial) {
  const auto s = spec(1, 4, 2, 3);
  const auto serial = search(s);
  for (unsigned t : {2u, 3u, 4u, 7u}) {
    SearchOptions o;
    o.threads = t;
    EXPECT_EQ(search(s, std::nullopt, o), serial) << t;
  }
}

TEST(Search, ResumeEqualsFresh) {
  const auto s = spec(1, 4, 1, 4);
  const auto fresh = search(s);
  for (std::size_t cut : {0ul, 1ul, 5ul, 40ul, 80ul, 1000ul}) {
    SearchOptions first;
    first.max_cells = cut;
    const auto part = search(s, std::nullopt, first);
    EXPECT_EQ(part.complete(), cut >= 81) << cut;
    // Round-trip the checkpoint through JSON before resuming.
    const auto reloaded = json::decode_checkpoint(nlohmann::json::parse(json::encode(part).dump()));
    EXPECT_EQ(reloaded, part);
    SearchOptions rest;
    rest.threads = 2;
    EXPECT_EQ(search(s, reloaded, rest), fresh) << cut;
  }
}

TEST(Search, ResumeInManySteps) {
  const auto s = spec(1, 3, 2, 3);
  const auto fresh = search(s);
  std::optional<SearchCheckpoint> cp;
  SearchOptions step;
  step.max_cells = 7;
  int rounds = 0;
  do {
    cp = search(s, cp, step);
    ++rounds;
    for (const auto& seed : cp->frontier) EXPECT_EQ(seed.size(), 1u);
    std::set<std::vector<LatticePoint>> unique(cp->frontier.begin(), cp->frontier.end());
    EXPECT_EQ(unique.size(), cp->frontier.size());
  } while (!cp->complete());
  EXPECT_GT(rounds, 2);
  EXPECT_EQ(*cp, fresh);
}

TEST(Search, MergeIsUnion) {
  const auto s = spec(1, 4, 1, 3);
  const auto fresh = search(s);
  SearchOptions a;
  a.max_cells = 30;
  const auto part = search(s, std::nullopt, a);
  EXPECT_EQ(merge(part, fresh), fresh);
  EXPECT_EQ(merge(fresh, part), fresh);
  EXPECT_EQ(merge(part, part), part);
  EXPECT_THROW(merge(part, search(spec(1, 3, 1, 3))), Error);
  EXPECT_THROW(search(spec(1, 3, 1, 3), part), Error);
}

TEST(Search, ProgressEvents) {
  const auto s = spec(1, 2, 1, 3);
  std::vector<SearchProgress> events;
  SearchOptions o;
  o.on_progress = [&](const SearchProgress& p) { events.push_back(p); };
  const auto result = search(s, std::nullopt, o);
  EXPECT_EQ(events.size(), candidate_points(s).size());
  std::size_t total = 0;
  for (const auto& e : events) total += e.found_in_cell;
  EXPECT_GE(total, result.found.size());
}

TEST(Search, CandidateOrder) {
  const auto pts = candidate_points(spec(1, 2, 2, 3));
  std::set<LatticePoint> unique(pts.begin(), pts.end());
  EXPECT_EQ(unique.size(), pts.size());
  // 7 distinct values p/q with |p| <= 2, q <= 2: -2, -1, -1/2, 0, 1/2, 1, 2.
  EXPECT_EQ(pts.size(), 49u);
  EXPECT_EQ(pts.front().x.denominator(), 1);
  EXPECT_EQ(pts.front().yc.denominator(), 1);
  EXPECT_EQ(pts.back().x.denominator(), 2);
}

TEST(SearchCheckpoint, JsonIsByteStable) {
  SearchOptions o;
  o.max_cells = 10;
  const auto cp = search(spec(1, 3, 1, 3, Requirement::strong_general_position), std::nullopt, o);
  const std::string text = json::encode(cp).dump();
  const auto back = json::decode_checkpoint(nlohmann::json::parse(text));
  EXPECT_EQ(back, cp);
  EXPECT_EQ(json::encode(back).dump(), text);
}
