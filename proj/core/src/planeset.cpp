#include "rds/planeset.hpp"

#include <algorithm>
#include <array>

#include "rds/error.hpp"
#include "rds/squarefree.hpp"

namespace rds {

Configuration::Configuration(std::int64_t k, std::vector<LatticePoint> points, std::string provenance)
    : k_(k), points_(std::move(points)), provenance_(std::move(provenance)) {
  if (k < 1 || !is_squarefree(Integer(static_cast<long>(k)))) {
    throw Error(Errc::invalid_argument, "configuration k=" + std::to_string(k) + " is not positive squarefree");
  }
  std::vector<LatticePoint> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(Errc::invalid_argument,
                "configuration repeats the point (" + dup->x.str() + ", " + dup->yc.str() + ")");
  }
}

Configuration Configuration::with_provenance(std::string provenance) const {
  Configuration out = *this;
  out.provenance_ = std::move(provenance);
  return out;
}

DistanceMatrix::DistanceMatrix(std::vector<std::vector<Rational>> squared) : squared_(std::move(squared)) {
  const std::size_t n = squared_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (squared_[i].size() != n) throw Error(Errc::invalid_argument, "distance matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!squared_[i][i].is_zero()) throw Error(Errc::invalid_argument, "distance matrix diagonal must be zero");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (squared_[i][j] != squared_[j][i]) {
        throw Error(Errc::invalid_argument, "distance matrix is not symmetric");
      }
      if (squared_[i][j].sign() <= 0) {
        throw Error(Errc::invalid_argument, "off-diagonal squared distances must be positive");
      }
    }
  }
}

Rational squared_distance(const LatticePoint& p, const LatticePoint& q, std::int64_t k) {
  const Rational dx = p.x - q.x;
  const Rational dy = p.yc - q.yc;
  return dx * dx + Rational(k) * dy * dy;
}

DistanceMatrix distance_matrix(const Configuration& c) {
  const std::size_t n = c.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m[i][j] = m[j][i] = squared_distance(c.point(i), c.point(j), c.k());
    }
  }
  return DistanceMatrix(std::move(m));
}

RdsReport verify_rds(const Configuration& c) {
  const std::size_t n = c.size();
  RdsReport report;
  report.distances.assign(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    report.distances[i][i] = Rational(0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational sq = squared_distance(c.point(i), c.point(j), c.k());
      auto root = rational_sqrt(sq);
      if (!root) {
        report.is_rds = false;
        report.failing_pairs.push_back({i, j, sq});
      }
      report.distances[i][j] = root;
      report.distances[j][i] = root;
    }
  }
  return report;
}

Configuration embed_from_distances(const DistanceMatrix& m, std::string provenance) {
  const std::size_t n = m.size();
  if (n < 2) throw Error(Errc::precondition, "embedding needs at least two points");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!is_rational_square(m.at(i, j))) {
        throw Error(Errc::not_rds_matrix, "not an RDS matrix: squared distance " + m.at(i, j).str() + " between " +
                                              std::to_string(i) + " and " + std::to_string(j) + " is not a square");
      }
    }
  }

  const Rational scale = m.at(0, 1).inverse();
  auto scaled = [&](std::size_t i, std::size_t j) { return m.at(i, j) * scale; };

  std::vector<LatticePoint> pts(n);
  pts[0] = {0, 0};
  pts[1] = {1, 0};
  std::optional<Integer> field;
  std::optional<std::size_t> anchor;  // first point with yc != 0
  for (std::size_t p = 2; p < n; ++p) {
    const Rational x = (scaled(0, p) + 1 - scaled(1, p)) / 2;
    const Rational h = scaled(0, p) - x * x;  // k * yc^2
    if (h.sign() < 0) {
      throw Error(Errc::not_planar, "not planar: point " + std::to_string(p) + " violates the triangle inequality");
    }
    pts[p].x = x;
    if (h.is_zero()) continue;
    SquarefreePart sp = squarefree_part(h);
    if (field && *field != sp.squarefree) {
      throw Error(Errc::mixed_field, "mixed field: point " + std::to_string(p) + " needs k=" +
                                         sp.squarefree.get_str() + " but earlier points need k=" + field->get_str());
    }
    field = sp.squarefree;
    pts[p].yc = sp.root;
    if (!anchor) anchor = p;
  }

  std::int64_t k = 1;
  if (field) {
    if (!field->fits_slong_p()) throw Error(Errc::domain, "field parameter k exceeds 64 bits");
    k = field->get_si();
  }

  if (anchor) {
    const LatticePoint& a = pts[*anchor];
    for (std::size_t p = *anchor + 1; p < n; ++p) {
      if (pts[p].yc.is_zero()) continue;
      if (squared_distance(a, pts[p], k) == scaled(*anchor, p)) continue;
      LatticePoint flipped{pts[p].x, -pts[p].yc};
      if (squared_distance(a, flipped, k) != scaled(*anchor, p)) {
        throw Error(Errc::not_planar, "not planar: no reflection of point " + std::to_string(p) +
                                          " matches its distance to point " + std::to_string(*anchor));
      }
      pts[p] = flipped;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (squared_distance(pts[i], pts[j], k) != scaled(i, j)) {
        throw Error(Errc::not_planar, "not planar: realized distance between " + std::to_string(i) + " and " +
                                          std::to_string(j) + " disagrees with the matrix");
      }
    }
  }
  return Configuration(k, std::move(pts), std::move(provenance));
}

Configuration normalize(const Configuration& c) {
  if (c.size() < 2) throw Error(Errc::precondition, "normalize needs at least two points");
  const RdsReport report = verify_rds(c);
  if (!report.is_rds) {
    const auto& f = report.failing_pairs.front();
    throw Error(Errc::not_rds, "not a rational distance set: squared distance " + f.squared.str() +
                                   " between points " + std::to_string(f.i) + " and " + std::to_string(f.j));
  }
  return embed_from_distances(distance_matrix(c), c.provenance());
}

bool collinear(const LatticePoint& p1, const LatticePoint& p2, const LatticePoint& p3) {
  const Rational det = (p2.x - p1.x) * (p3.yc - p1.yc) - (p3.x - p1.x) * (p2.yc - p1.yc);
  return det.is_zero();
}

bool concyclic(const LatticePoint& p1, const LatticePoint& p2, const LatticePoint& p3, const LatticePoint& p4,
               std::int64_t k) {
  const Rational kk(k);
  auto row = [&](const LatticePoint& p) {
    const Rational dx = p.x - p4.x;
    const Rational dy = p.yc - p4.yc;
    return std::array<Rational, 3>{dx, dy, dx * dx + kk * dy * dy};
  };
  const auto a = row(p1);
  const auto b = row(p2);
  const auto c = row(p3);
  const Rational det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                       a[2] * (b[0] * c[1] - b[1] * c[0]);
  return det.is_zero();
}

Configuration invert(const Configuration& c, std::size_t center_index) {
  if (center_index >= c.size()) {
    throw Error(Errc::invalid_argument, "inversion centre index " + std::to_string(center_index) + " out of range");
  }
  const LatticePoint& center = c.point(center_index);
  std::vector<LatticePoint> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == center_index) {
      out.push_back(center);
      continue;
    }
    const LatticePoint& p = c.point(i);
    const Rational d2 = squared_distance(p, center, c.k());
    out.push_back({center.x + (p.x - center.x) / d2, center.yc + (p.yc - center.yc) / d2});
  }
  return Configuration(c.k(), std::move(out), c.provenance());
}

}  // namespace rds
