#include "rds/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rds/error.hpp"

namespace rds {

namespace {
constexpr long kMaxHypotenuse = 200'000;
}

Configuration generate_line_rds(std::size_t n, const std::vector<Rational>& offsets) {
  if (offsets.size() != n) {
    throw Error(Errc::invalid_argument, "expected " + std::to_string(n) + " offsets, got " +
                                            std::to_string(offsets.size()));
  }
  std::vector<LatticePoint> pts;
  pts.reserve(n);
  for (const auto& o : offsets) pts.push_back({o, 0});
  return Configuration(1, std::move(pts), "line:n=" + std::to_string(n));
}

Configuration generate_line_rds(std::size_t n) {
  std::vector<Rational> offsets;
  for (std::size_t i = 0; i < n; ++i) offsets.emplace_back(static_cast<long>(i));
  return generate_line_rds(n, offsets);
}

std::vector<PythagoreanTriple> primitive_triples(long max_hypotenuse) {
  std::vector<PythagoreanTriple> out;
  for (long s = 2; s * s + 1 <= max_hypotenuse; ++s) {
    for (long t = 1; t < s; ++t) {
      if ((s - t) % 2 == 0 || std::gcd(s, t) != 1) continue;
      const long c = s * s + t * t;
      if (c > max_hypotenuse) break;
      out.push_back({s * s - t * t, 2 * s * t, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.c != r.c ? l.c < r.c : l.a < r.a; });
  return out;
}

Configuration generate_circle_rds(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "circle family needs n >= 1");
  std::vector<LatticePoint> pts{{1, 0}};
  if (n > 1) {
    const auto triples = primitive_triples(kMaxHypotenuse);
    if (triples.size() < n - 1) {
      throw Error(Errc::invalid_argument, "only " + std::to_string(triples.size()) +
                                              " primitive triples with hypotenuse <= " +
                                              std::to_string(kMaxHypotenuse) + "; lower n");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const auto& t = triples[i];
      const Integer c2 = Integer(t.c) * t.c;
      pts.push_back({Rational(Integer(t.a) * t.a - Integer(t.b) * t.b, c2), Rational(Integer(2 * t.a) * t.b, c2)});
    }
  }
  return Configuration(1, std::move(pts), "circle:n=" + std::to_string(n));
}

}  // namespace rds
