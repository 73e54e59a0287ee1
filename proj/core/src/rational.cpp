#include "rds/rational.hpp"

#include <ostream>

#include "rds/error.hpp"

namespace rds {

namespace {

bool valid_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::domain, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!valid_digits(num) || !valid_digits(den)) {
    throw Error(Errc::parse, "malformed rational \"" + std::string(text) + "\"");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (negative) n = -n;
  if (d == 0) throw Error(Errc::parse, "zero denominator in \"" + std::string(text) + "\"");
  return Rational(n, d);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::domain, "inverse of zero");
  return Rational(mpq_class(q_.get_den(), q_.get_num()));
}

Rational Rational::pow(unsigned exponent) const {
  Integer n;
  Integer d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(n, d));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(Errc::domain, "division by zero");
  q_ /= rhs.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q.sign() < 0) throw Error(Errc::domain, "square root of negative rational " + q.str());
  const Integer num = q.numerator();
  const Integer den = q.denominator();
  // Lowest terms: q is a square iff numerator and denominator both are.
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer rn;
  Integer rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

bool is_rational_square(const Rational& q) {
  if (q.sign() < 0) return false;
  return mpz_perfect_square_p(q.raw().get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.raw().get_den_mpz_t()) != 0;
}

std::size_t hash_value(const Rational& q) {
  const std::size_t h1 = std::hash<std::string>{}(q.raw().get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(q.raw().get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

}  // namespace rds
