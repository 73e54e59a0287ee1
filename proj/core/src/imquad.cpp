#include "rds/imquad.hpp"

#include <ostream>
#include <sstream>

#include "rds/error.hpp"
#include "rds/squarefree.hpp"

namespace rds {

ImQuadElement::ImQuadElement(std::int64_t k, Rational re, Rational im)
    : k_(k), re_(std::move(re)), im_(std::move(im)) {
  if (k < 1 || !is_squarefree(Integer(static_cast<long>(k)))) {
    throw Error(Errc::domain, "field parameter k=" + std::to_string(k) + " is not a positive squarefree integer");
  }
}

void ImQuadElement::require_same_field(const ImQuadElement& other) const {
  if (k_ != other.k_) {
    throw Error(Errc::domain, "mixing Q(sqrt(-" + std::to_string(k_) + ")) with Q(sqrt(-" +
                                  std::to_string(other.k_) + "))");
  }
}

Rational ImQuadElement::norm() const { return re_ * re_ + Rational(k_) * im_ * im_; }

ImQuadElement ImQuadElement::inverse() const {
  if (is_zero()) throw Error(Errc::domain, "inverse of zero in Q(w)");
  const Rational n = norm();
  return ImQuadElement(k_, re_ / n, -im_ / n, Unchecked{});
}

ImQuadElement& ImQuadElement::operator+=(const ImQuadElement& rhs) {
  require_same_field(rhs);
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

ImQuadElement& ImQuadElement::operator-=(const ImQuadElement& rhs) {
  require_same_field(rhs);
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

ImQuadElement& ImQuadElement::operator*=(const ImQuadElement& rhs) {
  require_same_field(rhs);
  // (a + bw)(c + dw) = (ac - k bd) + (ad + bc) w
  Rational re = re_ * rhs.re_ - Rational(k_) * im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ImQuadElement& ImQuadElement::operator/=(const ImQuadElement& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

ImQuadElement& ImQuadElement::operator*=(const Rational& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

std::string ImQuadElement::str() const {
  if (im_.is_zero()) return re_.str();
  std::string out;
  if (!re_.is_zero()) out = re_.str() + (im_.sign() > 0 ? " + " : " - ");
  else if (im_.sign() < 0) out = "-";
  const Rational mag = im_.abs();
  if (mag != 1) out += mag.str() + "*";
  return out + "w";
}

std::ostream& operator<<(std::ostream& os, const ImQuadElement& z) { return os << z.str(); }

// ---------------------------------------------------------------------------

ImQuadPoly::ImQuadPoly(std::int64_t k, std::vector<ImQuadElement> coefficients)
    : k_(k), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (c.k() != k_) throw Error(Errc::domain, "coefficient field does not match polynomial field");
  }
  trim();
}

ImQuadPoly ImQuadPoly::constant(const ImQuadElement& c) { return ImQuadPoly(c.k(), {c}); }

ImQuadPoly ImQuadPoly::linear_root(const ImQuadElement& root) {
  return ImQuadPoly(root.k(), {-root, ImQuadElement(root.k(), 1)});
}

ImQuadPoly ImQuadPoly::from_rationals(std::int64_t k, const std::vector<Rational>& coefficients) {
  std::vector<ImQuadElement> c;
  c.reserve(coefficients.size());
  for (const auto& q : coefficients) c.emplace_back(k, q);
  return ImQuadPoly(k, std::move(c));
}

void ImQuadPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void ImQuadPoly::require_same_field(const ImQuadPoly& other) const {
  if (k_ != other.k_) throw Error(Errc::domain, "polynomials over different fields");
}

const ImQuadElement& ImQuadPoly::leading() const {
  if (coeffs_.empty()) throw Error(Errc::domain, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

ImQuadElement ImQuadPoly::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return ImQuadElement(k_);
  return coeffs_[static_cast<std::size_t>(i)];
}

ImQuadElement ImQuadPoly::evaluate(const ImQuadElement& t) const {
  ImQuadElement acc(k_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

ImQuadPoly ImQuadPoly::derivative() const {
  ImQuadPoly out(k_);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.coeffs_.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  }
  out.trim();
  return out;
}

ImQuadPoly ImQuadPoly::conjugate() const {
  ImQuadPoly out(k_);
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(c.conjugate());
  return out;
}

ImQuadPoly ImQuadPoly::monic() const {
  if (is_zero()) return *this;
  const ImQuadElement inv = leading().inverse();
  return *this * inv;
}

ImQuadPoly ImQuadPoly::operator-() const {
  ImQuadPoly out(k_);
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(-c);
  return out;
}

ImQuadPoly& ImQuadPoly::operator+=(const ImQuadPoly& rhs) {
  require_same_field(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), ImQuadElement(k_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ImQuadPoly& ImQuadPoly::operator-=(const ImQuadPoly& rhs) {
  require_same_field(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), ImQuadElement(k_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

ImQuadPoly& ImQuadPoly::operator*=(const ImQuadPoly& rhs) {
  require_same_field(rhs);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<ImQuadElement> out(coeffs_.size() + rhs.coeffs_.size() - 1, ImQuadElement(k_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

ImQuadPoly& ImQuadPoly::operator*=(const ImQuadElement& rhs) {
  if (rhs.k() != k_) throw Error(Errc::domain, "scalar from a different field");
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

std::string ImQuadPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c.im().is_zero() && c.re() == 1;
    if (i == 0 || !unit) os << "(" << c.str() << ")";
    if (i >= 1) os << (unit ? "" : "*") << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ImQuadPoly& p) { return os << p.str(); }

std::pair<ImQuadPoly, ImQuadPoly> divmod(const ImQuadPoly& dividend, const ImQuadPoly& divisor) {
  if (divisor.is_zero()) throw Error(Errc::domain, "polynomial division by zero");
  if (dividend.k() != divisor.k()) throw Error(Errc::domain, "polynomials over different fields");
  const std::int64_t k = dividend.k();
  std::vector<ImQuadElement> rem = dividend.coefficients();
  const int dd = divisor.degree();
  const ImQuadElement lead_inv = divisor.leading().inverse();
  if (static_cast<int>(rem.size()) - 1 < dd) return {ImQuadPoly(k), dividend};

  std::vector<ImQuadElement> quot(rem.size() - static_cast<std::size_t>(dd), ImQuadElement(k));
  const auto& dc = divisor.coefficients();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    const ImQuadElement c = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= c * dc[static_cast<std::size_t>(j)];
  }
  return {ImQuadPoly(k, std::move(quot)), ImQuadPoly(k, std::move(rem))};
}

ImQuadPoly poly_gcd(const ImQuadPoly& p, const ImQuadPoly& q) {
  if (p.k() != q.k()) throw Error(Errc::domain, "gcd of polynomials over different fields");
  if (p.is_zero() && q.is_zero()) throw Error(Errc::domain, "gcd(0, 0) is undefined");
  ImQuadPoly a = p.monic();
  ImQuadPoly b = q.monic();
  while (!b.is_zero()) {
    ImQuadPoly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const ImQuadPoly& p) {
  if (p.is_zero()) throw Error(Errc::domain, "squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;

  const ImQuadPoly dp = p.derivative();
  const ImQuadPoly a0 = poly_gcd(p, dp);
  ImQuadPoly b = divmod(p, a0).first;
  ImQuadPoly c = divmod(dp, a0).first;
  ImQuadPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    const ImQuadPoly a = poly_gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    if (a.degree() > 0) out.push_back({a, i});
    ++i;
  }
  return out;
}

int root_multiplicity(const ImQuadPoly& p, const ImQuadElement& root) {
  if (p.is_zero()) throw Error(Errc::domain, "root multiplicity in the zero polynomial");
  const ImQuadPoly lin = ImQuadPoly::linear_root(root);
  ImQuadPoly cur = p;
  int m = 0;
  while (cur.degree() >= 1) {
    auto [quot, rem] = divmod(cur, lin);
    if (!rem.is_zero()) break;
    cur = std::move(quot);
    ++m;
  }
  return m;
}

}  // namespace rds
