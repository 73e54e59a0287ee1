#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rds/planeset.hpp"

namespace rds {

struct AuditWitness {
  std::string kind;  // "collinear" or "concyclic"
  std::vector<std::size_t> indices;
};

/// General-position audit of a configuration.
///
/// `literal_ok` reads the definition word for word: no subset of size n-4 on
/// a line and no subset of size n-3 on a circle. Negative sizes have no
/// subsets, and any set of at most two points lies on a line and on a circle,
/// so thresholds <= 2 decide the verdict without looking at the geometry;
/// those are flagged in `vacuous_line` / `vacuous_circle`. `strong_ok` is the classical form: no
/// three points collinear and no four concyclic.
struct AuditReport {
  std::size_t n = 0;
  long line_threshold = 0;
  long circle_threshold = 0;
  std::size_t max_collinear = 0;
  std::size_t max_concyclic = 0;
  bool literal_ok = true;
  bool strong_ok = true;
  bool vacuous_line = false;
  bool vacuous_circle = false;
  std::vector<AuditWitness> witnesses;
};

AuditReport audit_general_position(const Configuration& c);

/// Indices of a largest collinear subset (size min(n, 2) when no three are collinear).
std::vector<std::size_t> largest_collinear_subset(const Configuration& c);

/// Indices of a largest subset lying on one genuine circle. With every triple
/// collinear this is min(n, 2): two points always share a circle, three
/// collinear points never do.
std::vector<std::size_t> largest_concyclic_subset(const Configuration& c);

}  // namespace rds
