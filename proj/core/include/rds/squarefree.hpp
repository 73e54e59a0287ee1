#pragma once

#include <cstdint>

#include "rds/rational.hpp"

namespace rds {

/// Trial-division bound used when no explicit bound is given.
inline constexpr std::uint32_t kDefaultPrimeBound = 100'000;

/// q = squarefree * root^2 with `squarefree` a positive squarefree integer.
struct SquarefreePart {
  Integer squarefree;
  Rational root;
};

/// Splits a positive rational into its squarefree integer part and a rational
/// root. Factors by trial division over primes <= prime_bound. A cofactor left
/// after trial division is resolved exactly when it is below prime_bound^3
/// (it is then p, p^2 or p*q) or a perfect square; anything else raises
/// Error{unfactored_residue}. Nonpositive input raises Error{domain}.
SquarefreePart squarefree_part(const Rational& q, std::uint32_t prime_bound = kDefaultPrimeBound);

/// Squarefree kernel of a positive integer, with the same trial-division rules.
Integer squarefree_kernel(const Integer& n, std::uint32_t prime_bound = kDefaultPrimeBound);

bool is_squarefree(const Integer& n, std::uint32_t prime_bound = kDefaultPrimeBound);

}  // namespace rds
