#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace rds {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value type over GMP's mpq_class. The wrapper exists so that the
/// canonical-form invariant holds after every operation and so that no GMP
/// expression template escapes into calling code.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)

  /// Throws Error{domain} when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p", "-p", "p/q", "-p/q" with optional leading '+'. The result is
  /// reduced, so "2/4" parses to 1/2.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// "p/q", or "p" when q = 1; the sign always sits on the numerator.
  std::string str() const { return q_.get_str(); }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(unsigned exponent) const;

  const mpq_class& raw() const { return q_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Nonnegative square root when `q` is the square of a rational, otherwise
/// nullopt. Throws Error{domain} for negative input.
std::optional<Rational> rational_sqrt(const Rational& q);

bool is_rational_square(const Rational& q);

std::size_t hash_value(const Rational& q);

}  // namespace rds

template <>
struct std::hash<rds::Rational> {
  std::size_t operator()(const rds::Rational& q) const { return rds::hash_value(q); }
};
