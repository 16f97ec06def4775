#pragma once

// Exact modular arithmetic shared by the solver and the oracles.

#include <cstdint>
#include <stdexcept>

namespace egz {

/// Largest modulus accepted anywhere in the library. Keeps every group sum in
/// the composite case below n^2 < 2^62.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

/// Raised when a caller breaks a documented precondition (bad modulus,
/// wrong input length, malformed selection).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant fails. Never expected on valid input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Canonical representative of an integer class modulo `modulus`.
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 1;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Maps any signed x into [0, m). Throws ContractError when m == 0.
Residue reduce(std::int64_t x, std::uint64_t m);

/// Same as reduce() for values that are already non-negative.
inline std::uint64_t reduce_unsigned(std::uint64_t x, std::uint64_t m) { return x % m; }

/// Barrett reduction for a fixed modulus 2 <= m < 2^32. Exact for every
/// 64-bit input; replaces the hardware divide in hot loops.
class BarrettReducer {
 public:
  explicit BarrettReducer(std::uint64_t m)
      : modulus_(m), factor_(static_cast<std::uint64_t>(~std::uint64_t{0} / m)) {}

  std::uint64_t modulus() const { return modulus_; }

  std::uint64_t reduce(std::uint64_t x) const {
    const auto quotient =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * factor_) >> 64);
    std::uint64_t r = x - quotient * modulus_;
    return r >= modulus_ ? r - modulus_ : r;
  }

 private:
  std::uint64_t modulus_;
  std::uint64_t factor_;
};

/// Multiplicative inverse of d modulo prime p via extended Euclid.
/// Throws ContractError when p < 2 or d == 0 (mod p).
std::uint64_t mod_inverse(std::uint64_t d, std::uint64_t p);

/// Smallest divisor >= 2 of n, found by trial division up to sqrt(n).
/// The result is always prime. Throws ContractError when n < 2.
std::uint64_t smallest_prime_factor(std::uint64_t n);

inline bool is_prime(std::uint64_t n) { return n >= 2 && smallest_prime_factor(n) == n; }

}  // namespace egz
