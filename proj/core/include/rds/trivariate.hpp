#pragma once

#include <array>
#include <map>
#include <string>

#include "rds/imquad.hpp"
#include "rds/rational.hpp"

namespace rds {

/// Exponents of x, y, z.
using Monomial = std::array<int, 3>;

/// Sparse polynomial in x, y, z with rational coefficients. Zero terms are
/// never stored.
class TriPoly {
 public:
  TriPoly() = default;

  static TriPoly x() { return term({1, 0, 0}, 1); }
  static TriPoly y() { return term({0, 1, 0}, 1); }
  static TriPoly z() { return term({0, 0, 1}, 1); }
  static TriPoly constant(const Rational& c) { return term({0, 0, 0}, c); }
  static TriPoly term(const Monomial& m, const Rational& c);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree; -1 for zero.
  int total_degree() const;
  /// True when every term has total degree `d` (the zero polynomial is not).
  bool is_homogeneous(int d) const;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  Rational evaluate(const Rational& x, const Rational& y, const Rational& z) const;
  ImQuadElement evaluate(const ImQuadElement& x, const ImQuadElement& y, const ImQuadElement& z) const;
  /// f(x(t), y(t), z(t)) for univariate substitutions over a common field.
  ImQuadPoly substitute(const ImQuadPoly& x, const ImQuadPoly& y, const ImQuadPoly& z) const;

  /// Partial derivative in variable 0 (x), 1 (y) or 2 (z).
  TriPoly partial(int var) const;

  TriPoly operator-() const;
  TriPoly& operator+=(const TriPoly& rhs);
  TriPoly& operator-=(const TriPoly& rhs);
  TriPoly& operator*=(const TriPoly& rhs);
  TriPoly& operator*=(const Rational& rhs);
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(TriPoly a, const TriPoly& b) { return a *= b; }
  friend TriPoly operator*(TriPoly a, const Rational& b) { return a *= b; }
  friend TriPoly operator*(const Rational& b, TriPoly a) { return a *= b; }

  friend bool operator==(const TriPoly&, const TriPoly&) = default;

  std::string str() const;

 private:
  std::map<Monomial, Rational> terms_;
};

}  // namespace rds
