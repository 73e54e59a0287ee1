#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rds/rational.hpp"

namespace rds {

/// re + im * w in Q(w), w^2 = -k, k a positive squarefree integer.
///
/// Binary arithmetic requires equal k and raises Error{domain} otherwise.
/// Squarefreeness of k is validated once at construction.
class ImQuadElement {
 public:
  explicit ImQuadElement(std::int64_t k, Rational re = 0, Rational im = 0);

  static ImQuadElement omega(std::int64_t k) { return ImQuadElement(k, 0, 1); }

  std::int64_t k() const { return k_; }
  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  ImQuadElement conjugate() const { return ImQuadElement(k_, re_, -im_, Unchecked{}); }
  /// re^2 + k*im^2; zero only for the zero element.
  Rational norm() const;
  ImQuadElement inverse() const;

  ImQuadElement operator-() const { return ImQuadElement(k_, -re_, -im_, Unchecked{}); }
  ImQuadElement& operator+=(const ImQuadElement& rhs);
  ImQuadElement& operator-=(const ImQuadElement& rhs);
  ImQuadElement& operator*=(const ImQuadElement& rhs);
  ImQuadElement& operator/=(const ImQuadElement& rhs);
  ImQuadElement& operator*=(const Rational& rhs);

  friend ImQuadElement operator+(ImQuadElement a, const ImQuadElement& b) { return a += b; }
  friend ImQuadElement operator-(ImQuadElement a, const ImQuadElement& b) { return a -= b; }
  friend ImQuadElement operator*(ImQuadElement a, const ImQuadElement& b) { return a *= b; }
  friend ImQuadElement operator/(ImQuadElement a, const ImQuadElement& b) { return a /= b; }
  friend ImQuadElement operator*(ImQuadElement a, const Rational& b) { return a *= b; }

  friend bool operator==(const ImQuadElement& a, const ImQuadElement& b) {
    return a.k_ == b.k_ && a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string str() const;

 private:
  struct Unchecked {};
  ImQuadElement(std::int64_t k, Rational re, Rational im, Unchecked)
      : k_(k), re_(std::move(re)), im_(std::move(im)) {}
  void require_same_field(const ImQuadElement& other) const;

  std::int64_t k_;
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const ImQuadElement& z);

/// Univariate polynomial over Q(w), coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class ImQuadPoly {
 public:
  explicit ImQuadPoly(std::int64_t k) : k_(k) {}
  ImQuadPoly(std::int64_t k, std::vector<ImQuadElement> coefficients);

  static ImQuadPoly constant(const ImQuadElement& c);
  /// The monic linear polynomial t - root.
  static ImQuadPoly linear_root(const ImQuadElement& root);
  static ImQuadPoly from_rationals(std::int64_t k, const std::vector<Rational>& coefficients);

  std::int64_t k() const { return k_; }
  const std::vector<ImQuadElement>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const ImQuadElement& leading() const;
  ImQuadElement coefficient(int i) const;

  ImQuadElement evaluate(const ImQuadElement& t) const;
  ImQuadPoly derivative() const;
  ImQuadPoly conjugate() const;
  ImQuadPoly monic() const;

  ImQuadPoly operator-() const;
  ImQuadPoly& operator+=(const ImQuadPoly& rhs);
  ImQuadPoly& operator-=(const ImQuadPoly& rhs);
  ImQuadPoly& operator*=(const ImQuadPoly& rhs);
  ImQuadPoly& operator*=(const ImQuadElement& rhs);

  friend ImQuadPoly operator+(ImQuadPoly a, const ImQuadPoly& b) { return a += b; }
  friend ImQuadPoly operator-(ImQuadPoly a, const ImQuadPoly& b) { return a -= b; }
  friend ImQuadPoly operator*(ImQuadPoly a, const ImQuadPoly& b) { return a *= b; }
  friend ImQuadPoly operator*(ImQuadPoly a, const ImQuadElement& b) { return a *= b; }

  friend bool operator==(const ImQuadPoly& a, const ImQuadPoly& b) {
    return a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
  }

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  void require_same_field(const ImQuadPoly& other) const;

  std::int64_t k_;
  std::vector<ImQuadElement> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const ImQuadPoly& p);

/// Euclidean division; divisor must be nonzero.
std::pair<ImQuadPoly, ImQuadPoly> divmod(const ImQuadPoly& dividend, const ImQuadPoly& divisor);

/// Monic gcd. gcd(p, 0) = monic(p). Both zero or mismatched k raise Error{domain}.
ImQuadPoly poly_gcd(const ImQuadPoly& p, const ImQuadPoly& q);

struct SquarefreeFactor {
  ImQuadPoly factor;
  int multiplicity;
};

/// Yun's algorithm. Factors are monic, squarefree, pairwise coprime and listed
/// with strictly increasing multiplicity; their product equals p up to a
/// nonzero constant. Constants give an empty list; zero raises Error{domain}.
std::vector<SquarefreeFactor> squarefree_decomposition(const ImQuadPoly& p);

/// Multiplicity of `root` as a zero of p (0 when p(root) != 0). p must be nonzero.
int root_multiplicity(const ImQuadPoly& p, const ImQuadElement& root);

}  // namespace rds
