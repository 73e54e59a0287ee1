#pragma once

#include <cstddef>
#include <vector>

#include "rds/planeset.hpp"

namespace rds {

/// Points (offset_i, 0) with k = 1. `n` must equal offsets.size() and the
/// offsets must be distinct.
Configuration generate_line_rds(std::size_t n, const std::vector<Rational>& offsets);

/// Offsets 0, 1, ..., n-1.
Configuration generate_line_rds(std::size_t n);

/// n points on the unit circle: (1, 0) and, for the first n-1 primitive
/// Pythagorean triples (a, b, c) ordered by hypotenuse then odd leg, the point
/// at twice the angle whose cosine is a/c, namely ((a^2 - b^2)/c^2, 2ab/c^2).
/// Chords are 2|sin(t_i - t_j)| with rational sines and cosines, so the set
/// is an RDS. Throws Error{invalid_argument} for n = 0 or when the triple
/// table is exhausted.
Configuration generate_circle_rds(std::size_t n);

/// Primitive triples (a, b, c), a odd, ordered by c then a, with c <= max_hypotenuse.
struct PythagoreanTriple {
  long a;
  long b;
  long c;
};
std::vector<PythagoreanTriple> primitive_triples(long max_hypotenuse);

}  // namespace rds
