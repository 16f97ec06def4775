#include "egz/modarith.hpp"

#include <string>

namespace egz {

Residue reduce(std::int64_t x, std::uint64_t m) {
  if (m == 0) {
    throw ContractError("reduce: modulus must be >= 1");
  }
  // Work in unsigned space so INT64_MIN does not overflow on negation.
  const auto ux = static_cast<std::uint64_t>(x);
  if (x >= 0) {
    return {ux % m, m};
  }
  const std::uint64_t magnitude = ~ux + 1;
  const std::uint64_t r = magnitude % m;
  return {r == 0 ? 0 : m - r, m};
}

std::uint64_t mod_inverse(std::uint64_t d, std::uint64_t p) {
  if (p < 2) {
    throw ContractError("mod_inverse: modulus must be >= 2");
  }
  d %= p;
  if (d == 0) {
    throw ContractError("mod_inverse: 0 has no inverse modulo " + std::to_string(p));
  }
  // Iterative extended Euclid tracking only the coefficient of d.
  std::int64_t old_r = static_cast<std::int64_t>(d);
  std::int64_t r = static_cast<std::int64_t>(p);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t quotient = old_r / r;
    std::int64_t tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw ContractError("mod_inverse: " + std::to_string(d) + " is not invertible modulo " +
                        std::to_string(p));
  }
  const auto sp = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((old_s % sp) + sp) % sp);
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n < 2) {
    throw ContractError("smallest_prime_factor: n must be >= 2");
  }
  if (n % 2 == 0) {
    return 2;
  }
  for (std::uint64_t i = 3; i <= n / i; i += 2) {
    if (n % i == 0) {
      return i;
    }
  }
  return n;
}

}  // namespace egz
