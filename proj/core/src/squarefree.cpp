#include "rds/squarefree.hpp"

#include <span>
#include <string>
#include <vector>

#include "rds/error.hpp"

namespace rds {

namespace {

std::vector<std::uint32_t> sieve(std::uint32_t bound) {
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<std::uint32_t>& default_primes() {
  static const std::vector<std::uint32_t> primes = sieve(kDefaultPrimeBound);
  return primes;
}

// Returns (kernel, root) with n = kernel * root^2.
std::pair<Integer, Integer> split_integer(Integer n, std::uint32_t prime_bound) {
  std::vector<std::uint32_t> local;
  std::span<const std::uint32_t> primes;
  if (prime_bound <= kDefaultPrimeBound) {
    const auto& all = default_primes();
    auto end = all.begin();
    while (end != all.end() && *end <= prime_bound) ++end;
    primes = std::span<const std::uint32_t>(all.begin(), end);
  } else {
    local = sieve(prime_bound);
    primes = local;
  }

  Integer kernel = 1;
  Integer root = 1;
  for (std::uint32_t p : primes) {
    const Integer pp = static_cast<unsigned long>(p);
    if (pp * pp > n) break;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++exponent;
    }
    if (exponent == 0) continue;
    for (unsigned e = 0; e + 1 < exponent; e += 2) root *= p;
    if (exponent % 2 == 1) kernel *= p;
  }
  if (n == 1) return {kernel, root};

  // Every prime factor of the cofactor exceeds the last prime tried (or the
  // loop stopped because p^2 > n, in which case n is prime).
  const Integer b = static_cast<unsigned long>(prime_bound);
  if (n < b * b * b || mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
      root *= s;
    } else {
      kernel *= n;
    }
    return {kernel, root};
  }
  throw Error(Errc::unfactored_residue,
              "cofactor " + n.get_str() + " has no prime factor <= " + std::to_string(prime_bound) +
                  " and is too large to classify; raise the prime bound");
}

}  // namespace

SquarefreePart squarefree_part(const Rational& q, std::uint32_t prime_bound) {
  if (q.sign() <= 0) throw Error(Errc::domain, "squarefree part of nonpositive rational " + q.str());
  // q = n/d = n*d / d^2, so only n*d needs splitting.
  const Integer d = q.denominator();
  auto [kernel, root] = split_integer(q.numerator() * d, prime_bound);
  return {kernel, Rational(root, d)};
}

Integer squarefree_kernel(const Integer& n, std::uint32_t prime_bound) {
  if (n <= 0) throw Error(Errc::domain, "squarefree kernel of nonpositive integer " + n.get_str());
  return split_integer(n, prime_bound).first;
}

bool is_squarefree(const Integer& n, std::uint32_t prime_bound) {
  return n > 0 && squarefree_kernel(n, prime_bound) == n;
}

}  // namespace rds
