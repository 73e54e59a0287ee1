#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rds/planeset.hpp"

namespace rds {

/// The surface V in P^(2+m) cut out by r_j^2 = (x - a_j z)^2 + k (y - b_j z)^2.
class QuadricSystem {
 public:
  /// Base points must be pairwise distinct (Error{duplicate_base}) and m >= 1.
  QuadricSystem(std::int64_t k, std::vector<LatticePoint> base);

  std::int64_t k() const { return k_; }
  std::size_t m() const { return base_.size(); }
  const std::vector<LatticePoint>& base() const { return base_; }

  /// Value of equation j at homogeneous coordinates (x, y, z, r_1..r_m):
  /// (x - a_j z)^2 + k (y - b_j z)^2 - r_j^2.
  Rational residual(std::size_t j, const std::vector<Rational>& coords) const;

 private:
  std::int64_t k_;
  std::vector<LatticePoint> base_;
};

/// m base points (j, 0), j = 0..m-1, with k = 1.
QuadricSystem default_system(std::size_t m);

/// System over the chosen points of a lattice-form configuration. Fewer than
/// four indices raise Error{not_ample}; repeated ones Error{duplicate_base}.
QuadricSystem build_surface(const Configuration& c, const std::vector<std::size_t>& base_indices);

/// Homogeneous coordinates (x, y, z, r_1..r_m).
struct LiftedPoint {
  std::vector<Rational> coords;
  friend bool operator==(const LiftedPoint&, const LiftedPoint&) = default;
};

/// (u, v, 1, s_1..s_m) with s_j >= 0 the distance to base point j. Throws
/// Error{not_equidistant} naming the first j whose distance is irrational.
LiftedPoint lift_point(const LatticePoint& p, const QuadricSystem& sys);

/// Exact check of all m relations; false for the wrong coordinate count or
/// the all-zero vector.
bool verify_on_surface(const LiftedPoint& pt, const QuadricSystem& sys);

/// (x/z, y/z). Throws Error{domain} for points at infinity.
LatticePoint project(const LiftedPoint& pt);

/// Rank of the m x (3+m) Jacobian of the system at a rational point. V is
/// singular there exactly when the rank is below m.
std::size_t jacobian_rank(const QuadricSystem& sys, const LiftedPoint& pt);

struct SingularityLocation {
  enum class Kind { finite, infinity };
  Kind kind = Kind::finite;
  std::size_t base = 0;   // finite: the base point the singularity lies over
  std::uint64_t sheet = 0;  // finite: sign pattern of the other m-1 coordinates
  int sign = 1;           // infinity: over (1, sign*i, 0)

  std::string str() const;
  friend bool operator==(const SingularityLocation&, const SingularityLocation&) = default;
};

/// A singular point with its Hilbert-Samuel multiplicity e and discrepancy a.
struct SingularityRecord {
  SingularityLocation location;
  long e = 1;
  Rational a;
  bool canonical() const { return a.sign() >= 0; }
  friend bool operator==(const SingularityRecord&, const SingularityRecord&) = default;
};

/// The m 2^(m-1) ordinary double points over the base points (e = 2, a = 0)
/// followed by the two points over (1, +-i, 0) with e = 2^(m-2), a = 3 - m.
/// Requires m >= 3 (Error{precondition}).
std::vector<SingularityRecord> singularity_census(const QuadricSystem& sys);

struct SurfaceInvariants {
  Integer degree;          // 2^m
  long canonical_twist;    // omega_V = O_V(m - 3)
  bool ample;              // m >= 4
  Integer k_squared;       // (m - 3)^2 2^m
};

SurfaceInvariants surface_invariants(std::size_t m);

struct GeneralTypeCertificate {
  std::optional<std::size_t> m;
  int dim = 2;
  Rational k_d;
  std::vector<SingularityRecord> records;
  Rational lhs;
  Rational rhs;
  bool ample = false;
  bool verdict = false;
  std::string reason;
};

/// Ampleness plus K^d > sum over records with a < 0 of |a|^dim * e.
GeneralTypeCertificate check_general_type(int dim, const Rational& k_d, std::vector<SingularityRecord> records,
                                          bool ample);

/// Invariants, census and criterion for V. Systems with m < 4 get verdict
/// false with reason "not ample".
GeneralTypeCertificate certify_surface(const QuadricSystem& sys);

/// certify_surface(default_system(m)).
GeneralTypeCertificate certify_m(std::size_t m);

}  // namespace rds
