#include "rds/trivariate.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace rds {

namespace {

template <typename T>
std::vector<T> powers(const T& base, int max_exp, const T& one) {
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(max_exp) + 1);
  out.push_back(one);
  for (int e = 1; e <= max_exp; ++e) out.push_back(out.back() * base);
  return out;
}

int max_exponent(const std::map<Monomial, Rational>& terms, int var) {
  int m = 0;
  for (const auto& [mono, c] : terms) m = std::max(m, mono[static_cast<std::size_t>(var)]);
  return m;
}

}  // namespace

TriPoly TriPoly::term(const Monomial& m, const Rational& c) {
  TriPoly p;
  p.add_term(m, c);
  return p;
}

int TriPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2]);
  return d;
}

bool TriPoly::is_homogeneous(int d) const {
  if (terms_.empty()) return false;
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first[0] + t.first[1] + t.first[2] == d; });
}

Rational TriPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TriPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational TriPoly::evaluate(const Rational& x, const Rational& y, const Rational& z) const {
  const auto px = powers(x, max_exponent(terms_, 0), Rational(1));
  const auto py = powers(y, max_exponent(terms_, 1), Rational(1));
  const auto pz = powers(z, max_exponent(terms_, 2), Rational(1));
  Rational acc;
  for (const auto& [m, c] : terms_) acc += c * px[m[0]] * py[m[1]] * pz[m[2]];
  return acc;
}

ImQuadElement TriPoly::evaluate(const ImQuadElement& x, const ImQuadElement& y, const ImQuadElement& z) const {
  const std::int64_t k = x.k();
  const ImQuadElement one(k, 1);
  const auto px = powers(x, max_exponent(terms_, 0), one);
  const auto py = powers(y, max_exponent(terms_, 1), one);
  const auto pz = powers(z, max_exponent(terms_, 2), one);
  ImQuadElement acc(k);
  for (const auto& [m, c] : terms_) acc += px[m[0]] * py[m[1]] * pz[m[2]] * c;
  return acc;
}

ImQuadPoly TriPoly::substitute(const ImQuadPoly& x, const ImQuadPoly& y, const ImQuadPoly& z) const {
  const std::int64_t k = x.k();
  const ImQuadPoly one = ImQuadPoly::constant(ImQuadElement(k, 1));
  const auto px = powers(x, max_exponent(terms_, 0), one);
  const auto py = powers(y, max_exponent(terms_, 1), one);
  const auto pz = powers(z, max_exponent(terms_, 2), one);
  ImQuadPoly acc(k);
  for (const auto& [m, c] : terms_) acc += px[m[0]] * py[m[1]] * pz[m[2]] * ImQuadElement(k, c);
  return acc;
}

TriPoly TriPoly::partial(int var) const {
  TriPoly out;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [m, c] : terms_) {
    if (m[v] == 0) continue;
    Monomial d = m;
    d[v] -= 1;
    out.add_term(d, c * Rational(m[v]));
  }
  return out;
}

TriPoly TriPoly::operator-() const {
  TriPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

TriPoly& TriPoly::operator+=(const TriPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

TriPoly& TriPoly::operator*=(const TriPoly& rhs) {
  TriPoly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      out.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

TriPoly& TriPoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

std::string TriPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static constexpr const char* names[3] = {"x", "y", "z"};
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = c.abs();
    const bool bare = m[0] + m[1] + m[2] > 0 && mag == 1;
    if (!bare) os << mag.str();
    bool need_star = !bare;
    for (std::size_t v = 0; v < 3; ++v) {
      if (m[v] == 0) continue;
      os << (need_star ? "*" : "") << names[v];
      if (m[v] > 1) os << "^" << m[v];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace rds
