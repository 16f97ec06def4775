#pragma once

// Slow, independent reference implementations used to cross-check the fast
// solver. Nothing here shares code with core beyond the Selection type.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "egz/core.hpp"

namespace egz::oracle {

/// Residue set mod p stored as a dense boolean table.
using ResidueSet = std::vector<bool>;

/// S + {0, a} (mod p). Throws ContractError on an empty S or a >= p.
ResidueSet oplus(const ResidueSet& s, std::uint64_t p, std::uint64_t a);

std::size_t set_size(const ResidueSet& s);

/// Where a residue of S_i first came from.
struct Provenance {
  std::uint32_t step = 0;  // 0 marks the seed of S_1
  std::uint64_t predecessor = 0;
};

/// Explicitly materialised sets S_1..S_p for a prime instance.
struct ExplicitSetState {
  std::uint64_t p = 0;
  /// Stable residue order of the inputs.
  std::vector<Position> sorted;
  /// Set when some b_i == b_{i+p} (mod p); the sets are then left empty.
  std::optional<std::size_t> run_start;
  /// sets[i-1] is S_i.
  std::vector<ResidueSet> sets;
  /// d_i for i = 1..p-1, stored at index i-1.
  std::vector<std::uint64_t> differences;
  std::vector<std::optional<Provenance>> provenance;
};

ExplicitSetState build_explicit_sets(std::uint64_t p, std::span<const std::int64_t> raw);

/// O(p^2) prime solver backtracking through ExplicitSetState.
Selection solve_prime_quadratic(std::uint64_t p, std::span<const std::int64_t> raw);

inline constexpr std::uint64_t kExhaustiveCap = 12;

/// Lexicographically first valid mask over all C(2n-1, n) subsets, or
/// nullopt if none exists. Throws ContractError when n > kExhaustiveCap.
std::optional<Selection> solve_exhaustive(std::uint64_t n, std::span<const std::int64_t> raw);

enum class Verdict { kValid, kWrongCardinality, kNotDivisible };

/// O(n) certificate check. Throws ContractError on a length mismatch.
Verdict classify_selection(std::uint64_t n, std::span<const std::int64_t> raw,
                           const Selection& selection);

bool check_selection(std::uint64_t n, std::span<const std::int64_t> raw,
                     const Selection& selection);

}  // namespace egz::oracle
