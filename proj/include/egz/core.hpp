#pragma once

// Deterministic O(n log n) solver for zero-sum subsequences of length n
// among 2n-1 integers (Erdos-Ginzburg-Ziv).
//
// Prime moduli grow an implicit reachable-residue table one element per step,
// locating each new element with a binary search along the cyclic walk
// x -> x*d (mod p). Composite moduli peel off 2q-1 disjoint zero-sum groups of
// size p and solve the q-sized problem on the group quotients.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "egz/modarith.hpp"

namespace egz {

/// Index into the original input sequence (0-based).
using Position = std::uint32_t;

/// A modulus n together with its 2n-1 values reduced into [0, n).
struct Instance {
  std::uint64_t n = 1;
  std::vector<std::uint64_t> values;

  /// Reduces raw signed inputs. Throws ContractError on n == 0, n > kMaxModulus
  /// or a length other than 2n-1.
  static Instance from_raw(std::uint64_t n, std::span<const std::int64_t> raw);
};

/// 0/1 mask aligned with the original input order.
struct Selection {
  std::vector<std::uint8_t> mask;

  std::size_t size() const { return mask.size(); }
  std::size_t count() const;
  /// "0"/"1" string of length 2n-1.
  std::string to_mask_string() const;
  /// Ascending 1-based indices of the selected positions.
  std::vector<std::uint64_t> to_indices() const;

  friend bool operator==(const Selection&, const Selection&) = default;
};

/// Stable ordering of positions by residue (ties keep input order).
/// `order[j]` is the position holding the j-th smallest residue.
struct SortedView {
  std::vector<Position> order;
};

/// Counting sort of `values` (each < modulus) by residue. O(len + modulus).
SortedView sort_by_residue(std::span<const std::uint64_t> values, std::uint64_t modulus);

/// Residues reached so far in the prime case, with the step that created each
/// one. Backed by flat arrays of length p so membership is O(1).
class ReachableSet {
 public:
  static constexpr std::uint32_t kNoParent = 0;

  explicit ReachableSet(std::uint64_t p);

  std::uint64_t modulus() const { return static_cast<std::uint64_t>(member_.size()); }
  bool contains(std::uint64_t residue) const { return member_[residue] != 0; }
  std::size_t size() const { return size_; }

  /// 1-based step that inserted `residue`; kNoParent for the seed or absent.
  std::uint32_t parent(std::uint64_t residue) const { return parent_[residue]; }

  void seed(std::uint64_t residue);
  /// Inserts a residue produced at `step` (>= 2). Throws InvariantError if
  /// the residue is already present.
  void insert(std::uint64_t residue, std::uint32_t step);

  std::span<const std::uint8_t> membership() const { return member_; }

 private:
  std::vector<std::uint8_t> member_;
  std::vector<std::uint32_t> parent_;
  std::size_t size_ = 0;
};

struct FindTResult {
  std::uint64_t t = 0;
  /// Membership probes performed by the binary search.
  std::uint32_t probes = 0;
};

/// Finds t with member[(t - d) mod p] set and member[t] clear, given a member
/// u and a non-member v. At most ceil(log2(2p)) probes.
/// Throws ContractError when d == 0 (mod p) or u/v violate the precondition.
FindTResult find_t(std::uint64_t p, std::span<const std::uint8_t> member, std::uint64_t d,
                   std::uint64_t u, std::uint64_t v);

/// Optional hooks for tests and instrumentation. A solver reports only its own
/// level; nested recursive solves are not observed.
class SolveObserver {
 public:
  virtual ~SolveObserver() = default;

  virtual void on_sorted(const SortedView&) {}
  /// Equal-residue run found starting at sorted index `start` (0-based).
  virtual void on_run_shortcut(std::size_t /*start*/) {}
  virtual void on_seed(std::uint64_t /*s*/) {}
  /// One growth step (1-based step index as in the recursion S_1..S_p).
  virtual void on_step(std::uint32_t /*step*/, std::uint64_t /*d*/, const FindTResult&,
                       const ReachableSet&) {}
  /// Reconstruction swapped `removed` out and `added` in while undoing `step`.
  virtual void on_swap(std::uint32_t /*step*/, Position /*removed*/, Position /*added*/) {}
  /// One zero-sum group of the composite case, positions in input order.
  virtual void on_group(std::size_t /*index*/, std::span<const Position> /*positions*/,
                        std::uint64_t /*residue_sum*/, std::uint64_t /*quotient*/) {}
};

/// Prime case. `values` must hold 2p-1 non-negative integers; they are reduced
/// mod p internally.
Selection egz_prime(std::uint64_t p, std::span<const std::uint64_t> values,
                    SolveObserver* observer = nullptr);

/// Composite case n = p*q with 2 <= p <= q.
Selection egz_composite(std::uint64_t p, std::uint64_t q, std::span<const std::uint64_t> values,
                        SolveObserver* observer = nullptr);

/// Dispatcher on non-negative values (n = 1, prime, composite).
Selection egz(std::uint64_t n, std::span<const std::uint64_t> values,
              SolveObserver* observer = nullptr);

/// Dispatcher on raw signed inputs; reduces them first.
Selection egz(std::uint64_t n, std::span<const std::int64_t> raw,
              SolveObserver* observer = nullptr);

Selection egz(const Instance& instance, SolveObserver* observer = nullptr);

}  // namespace egz
