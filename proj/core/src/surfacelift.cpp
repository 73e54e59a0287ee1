#include "rds/surfacelift.hpp"

#include <algorithm>

#include "rds/error.hpp"

namespace rds {

QuadricSystem::QuadricSystem(std::int64_t k, std::vector<LatticePoint> base) : k_(k), base_(std::move(base)) {
  if (base_.empty()) throw Error(Errc::invalid_argument, "a quadric system needs at least one base point");
  if (k < 1) throw Error(Errc::invalid_argument, "k must be positive");
  std::vector<LatticePoint> sorted = base_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::duplicate_base, "base points of a quadric system must be distinct");
  }
}

Rational QuadricSystem::residual(std::size_t j, const std::vector<Rational>& coords) const {
  const auto& b = base_.at(j);
  const Rational u = coords[0] - b.x * coords[2];
  const Rational v = coords[1] - b.yc * coords[2];
  const Rational& r = coords[3 + j];
  return u * u + Rational(k_) * v * v - r * r;
}

QuadricSystem default_system(std::size_t m) {
  std::vector<LatticePoint> base;
  for (std::size_t j = 0; j < m; ++j) base.push_back({Rational(static_cast<long>(j)), 0});
  return QuadricSystem(1, std::move(base));
}

QuadricSystem build_surface(const Configuration& c, const std::vector<std::size_t>& base_indices) {
  std::vector<std::size_t> sorted = base_indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::duplicate_base, "base indices repeat");
  }
  std::vector<LatticePoint> base;
  for (std::size_t i : base_indices) {
    if (i >= c.size()) throw Error(Errc::invalid_argument, "base index " + std::to_string(i) + " out of range");
    base.push_back(c.point(i));
  }
  if (base_indices.size() < 4) {
    throw Error(Errc::not_ample, "canonical sheaf not ample: need at least 4 base points, have " +
                                     std::to_string(base_indices.size()));
  }
  return QuadricSystem(c.k(), std::move(base));
}

LiftedPoint lift_point(const LatticePoint& p, const QuadricSystem& sys) {
  LiftedPoint out;
  out.coords.reserve(3 + sys.m());
  out.coords.push_back(p.x);
  out.coords.push_back(p.yc);
  out.coords.push_back(1);
  for (std::size_t j = 0; j < sys.m(); ++j) {
    const Rational sq = squared_distance(p, sys.base()[j], sys.k());
    auto s = rational_sqrt(sq);
    if (!s) {
      throw Error(Errc::not_equidistant, "not rationally equidistant: squared distance " + sq.str() +
                                             " to base point " + std::to_string(j) + " is not a square");
    }
    out.coords.push_back(std::move(*s));
  }
  return out;
}

bool verify_on_surface(const LiftedPoint& pt, const QuadricSystem& sys) {
  if (pt.coords.size() != 3 + sys.m()) return false;
  if (std::all_of(pt.coords.begin(), pt.coords.end(), [](const Rational& q) { return q.is_zero(); })) return false;
  for (std::size_t j = 0; j < sys.m(); ++j) {
    if (!sys.residual(j, pt.coords).is_zero()) return false;
  }
  return true;
}

LatticePoint project(const LiftedPoint& pt) {
  if (pt.coords.size() < 3 || pt.coords[2].is_zero()) {
    throw Error(Errc::domain, "cannot project a point at infinity to the affine plane");
  }
  return {pt.coords[0] / pt.coords[2], pt.coords[1] / pt.coords[2]};
}

std::size_t jacobian_rank(const QuadricSystem& sys, const LiftedPoint& pt) {
  const std::size_t m = sys.m();
  const std::size_t cols = 3 + m;
  if (pt.coords.size() != cols) throw Error(Errc::precondition, "coordinate count does not match the system");
  const Rational kk(sys.k());
  const auto& c = pt.coords;
  std::vector<std::vector<Rational>> jac(m, std::vector<Rational>(cols));
  for (std::size_t j = 0; j < m; ++j) {
    const auto& b = sys.base()[j];
    const Rational u = c[0] - b.x * c[2];
    const Rational v = c[1] - b.yc * c[2];
    jac[j][0] = 2 * u;
    jac[j][1] = 2 * kk * v;
    jac[j][2] = -2 * b.x * u - 2 * kk * b.yc * v;
    jac[j][3 + j] = -2 * c[3 + j];
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && jac[pivot][col].is_zero()) ++pivot;
    if (pivot == m) continue;
    std::swap(jac[pivot], jac[rank]);
    for (std::size_t r = rank + 1; r < m; ++r) {
      if (jac[r][col].is_zero()) continue;
      const Rational f = jac[r][col] / jac[rank][col];
      for (std::size_t cc = col; cc < cols; ++cc) jac[r][cc] -= f * jac[rank][cc];
    }
    ++rank;
  }
  return rank;
}

std::string SingularityLocation::str() const {
  if (kind == Kind::infinity) return sign > 0 ? "infinity:+" : "infinity:-";
  return "finite:base=" + std::to_string(base) + ":sheet=" + std::to_string(sheet);
}

std::vector<SingularityRecord> singularity_census(const QuadricSystem& sys) {
  const std::size_t m = sys.m();
  if (m < 3) {
    throw Error(Errc::precondition, "the census needs m >= 3 base points, have " + std::to_string(m));
  }
  if (m > 62) throw Error(Errc::domain, "census size 2^(m-1) exceeds 64-bit range");
  const std::uint64_t sheets = std::uint64_t{1} << (m - 1);
  std::vector<SingularityRecord> out;
  out.reserve(static_cast<std::size_t>(m * sheets + 2));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::uint64_t s = 0; s < sheets; ++s) {
      out.push_back({{SingularityLocation::Kind::finite, j, s, 1}, 2, Rational(0)});
    }
  }
  const long e_inf = 1L << (m - 2);
  const Rational a_inf = Rational(3) - Rational(static_cast<long>(m));
  out.push_back({{SingularityLocation::Kind::infinity, 0, 0, 1}, e_inf, a_inf});
  out.push_back({{SingularityLocation::Kind::infinity, 0, 0, -1}, e_inf, a_inf});
  return out;
}

SurfaceInvariants surface_invariants(std::size_t m) {
  SurfaceInvariants inv;
  mpz_ui_pow_ui(inv.degree.get_mpz_t(), 2, m);
  inv.canonical_twist = static_cast<long>(m) - 3;
  inv.ample = m >= 4;
  inv.k_squared = Integer(inv.canonical_twist * inv.canonical_twist) * inv.degree;
  return inv;
}

GeneralTypeCertificate check_general_type(int dim, const Rational& k_d, std::vector<SingularityRecord> records,
                                          bool ample) {
  GeneralTypeCertificate cert;
  cert.dim = dim;
  cert.k_d = k_d;
  cert.lhs = k_d;
  cert.ample = ample;
  for (const auto& rec : records) {
    if (rec.e < 1) throw Error(Errc::precondition, "Hilbert-Samuel multiplicity must be at least 1");
    if (rec.a.sign() < 0) cert.rhs += rec.a.abs().pow(static_cast<unsigned>(dim)) * Rational(rec.e);
  }
  cert.records = std::move(records);
  if (!ample) {
    cert.reason = "criterion inapplicable: canonical divisor not ample";
  } else if (cert.lhs > cert.rhs) {
    cert.verdict = true;
  } else {
    cert.reason = "K^d does not exceed the singularity correction";
  }
  return cert;
}

GeneralTypeCertificate certify_surface(const QuadricSystem& sys) {
  const std::size_t m = sys.m();
  const SurfaceInvariants inv = surface_invariants(m);
  std::vector<SingularityRecord> records;
  if (m >= 3) records = singularity_census(sys);
  GeneralTypeCertificate cert = check_general_type(2, Rational(inv.k_squared), std::move(records), inv.ample);
  cert.m = m;
  if (!inv.ample) cert.reason = "not ample";
  return cert;
}

GeneralTypeCertificate certify_m(std::size_t m) {
  if (m < 1) {
    GeneralTypeCertificate cert;
    cert.m = m;
    cert.reason = "not ample";
    return cert;
  }
  return certify_surface(default_system(m));
}

}  // namespace rds
