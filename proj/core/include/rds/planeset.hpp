#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rds/rational.hpp"

namespace rds {

/// The plane point (x, yc * sqrt(k)) for the k of the owning configuration.
struct LatticePoint {
  Rational x;
  Rational yc;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend std::strong_ordering operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// A finite planar point set in lattice form. Points are pairwise distinct
/// and k is a positive squarefree integer; the constructor enforces both.
/// Equality compares k and the ordered point list; provenance is a label.
class Configuration {
 public:
  Configuration(std::int64_t k, std::vector<LatticePoint> points, std::string provenance = {});

  std::int64_t k() const { return k_; }
  const std::vector<LatticePoint>& points() const { return points_; }
  const LatticePoint& point(std::size_t i) const { return points_.at(i); }
  std::size_t size() const { return points_.size(); }
  const std::string& provenance() const { return provenance_; }

  Configuration with_provenance(std::string provenance) const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.k_ == b.k_ && a.points_ == b.points_;
  }

 private:
  std::int64_t k_;
  std::vector<LatticePoint> points_;
  std::string provenance_;
};

/// Symmetric matrix of squared distances with zero diagonal and positive
/// off-diagonal entries; validated on construction.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::vector<std::vector<Rational>> squared);

  std::size_t size() const { return squared_.size(); }
  const Rational& at(std::size_t i, std::size_t j) const { return squared_[i][j]; }
  const std::vector<std::vector<Rational>>& squared() const { return squared_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::vector<std::vector<Rational>> squared_;
};

/// (dx)^2 + k (dyc)^2.
Rational squared_distance(const LatticePoint& p, const LatticePoint& q, std::int64_t k);

DistanceMatrix distance_matrix(const Configuration& c);

struct FailingPair {
  std::size_t i;
  std::size_t j;
  Rational squared;
};

struct RdsReport {
  bool is_rds = true;
  std::vector<FailingPair> failing_pairs;
  /// distances[i][j] is the exact distance, or nullopt where it is irrational.
  std::vector<std::vector<std::optional<Rational>>> distances;
};

RdsReport verify_rds(const Configuration& c);

/// Realizes an RDS distance matrix in lattice form with point 0 at (0,0) and
/// point 1 at (1,0), all distances divided by d(0,1). The first point off the
/// x-axis gets yc > 0; every later sign is fixed against that point and the
/// whole matrix is re-verified. Errors: Error{not_rds_matrix} for a non-square
/// entry, Error{mixed_field} when off-axis points disagree on k, and
/// Error{not_planar} when no sign choice reproduces the matrix.
Configuration embed_from_distances(const DistanceMatrix& m, std::string provenance = {});

/// embed_from_distances of the configuration's own distance matrix. Throws
/// Error{not_rds} when c is not a rational distance set.
Configuration normalize(const Configuration& c);

/// Exact collinearity; the sqrt(k) factor cancels so k is not needed.
bool collinear(const LatticePoint& p1, const LatticePoint& p2, const LatticePoint& p3);

/// True when the four points lie on a common circle or line.
bool concyclic(const LatticePoint& p1, const LatticePoint& p2, const LatticePoint& p3, const LatticePoint& p4,
               std::int64_t k);

/// Inversion in the unit circle centred at points[center_index]. The centre is
/// kept in place and every other point is replaced by its image, so the result
/// is again an RDS in the same lattice.
Configuration invert(const Configuration& c, std::size_t center_index);

}  // namespace rds
