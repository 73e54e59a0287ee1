#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rds/planeset.hpp"

namespace rds {

enum class Requirement { any, strong_general_position, literal_general_position };

std::string_view to_string(Requirement r);
Requirement parse_requirement(std::string_view text);

/// Bounded-height search domain: points (p/q, (r/q') sqrt(k)) with
/// |p|, |r| <= numerator_bound and 1 <= q, q' <= denominator_bound.
struct SearchSpec {
  std::int64_t k = 1;
  long numerator_bound = 1;
  long denominator_bound = 1;
  std::size_t target_size = 3;
  Requirement require = Requirement::any;

  /// Throws Error{invalid_argument} on nonpositive bounds, target_size < 3 or
  /// k not positive squarefree.
  void validate() const;

  friend bool operator==(const SearchSpec&, const SearchSpec&) = default;
};

/// Half-open range [begin, end) of outer-loop cells. Cell i holds every
/// configuration whose first point, in candidate order, is candidate i.
struct CellRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const CellRange&, const CellRange&) = default;
};

struct SearchCheckpoint {
  SearchSpec spec;
  /// Pending partial configurations: the one-point seed of every cell not yet
  /// exhausted, in candidate order.
  std::vector<std::vector<LatticePoint>> frontier;
  /// Similarity-canonical configurations, sorted.
  std::vector<Configuration> found;
  /// Sorted, disjoint, non-adjacent ranges of finished cells.
  std::vector<CellRange> exhausted_ranges;

  bool complete() const { return frontier.empty(); }
  friend bool operator==(const SearchCheckpoint& a, const SearchCheckpoint& b) {
    return a.spec == b.spec && a.frontier == b.frontier && a.found == b.found &&
           a.exhausted_ranges == b.exhausted_ranges;
  }
};

struct SearchProgress {
  std::size_t cell = 0;
  std::size_t cells_total = 0;
  std::size_t found_in_cell = 0;
};

struct SearchOptions {
  /// Stop after this many new cells; the returned checkpoint can be resumed.
  std::size_t max_cells = std::numeric_limits<std::size_t>::max();
  unsigned threads = 1;
  /// Called once per finished cell, serialized across workers.
  std::function<void(const SearchProgress&)> on_progress;
};

/// Every candidate point of the spec in search order: by denominators of x
/// and yc, then by value.
std::vector<LatticePoint> candidate_points(const SearchSpec& spec);

/// Representative of the similarity class (translations, rotations,
/// reflections, dilations that keep the lattice): two points sent to (0,0) and
/// (1,0), the rest sorted, lexicographically least over all choices and both
/// orientations.
Configuration canonical_form(const Configuration& c);

bool meets_requirement(const Configuration& c, Requirement r);

/// Exhaustive clique search in the rational-distance graph of the candidate
/// points, resuming from `checkpoint` when given. A partial set is dropped as
/// soon as one of its distances is irrational. Results are deterministic for
/// a spec regardless of thread count or how the run is split.
SearchCheckpoint search(const SearchSpec& spec, const std::optional<SearchCheckpoint>& checkpoint = std::nullopt,
                        const SearchOptions& options = {});

/// Union of two checkpoints for the same spec.
SearchCheckpoint merge(const SearchCheckpoint& a, const SearchCheckpoint& b);

}  // namespace rds
