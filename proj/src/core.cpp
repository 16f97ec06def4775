#include "egz/core.hpp"

#include <algorithm>
#include <string>

namespace egz {

namespace {

void require_length(std::uint64_t n, std::size_t length, const char* who) {
  if (length != 2 * n - 1) {
    throw ContractError(std::string(who) + ": expected " + std::to_string(2 * n - 1) +
                        " values for n = " + std::to_string(n) + ", got " +
                        std::to_string(length));
  }
}

void require_modulus(std::uint64_t n, const char* who) {
  if (n == 0 || n > kMaxModulus) {
    throw ContractError(std::string(who) + ": modulus " + std::to_string(n) +
                        " outside [1, 2^31 - 1]");
  }
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

}  // namespace

Instance Instance::from_raw(std::uint64_t n, std::span<const std::int64_t> raw) {
  require_modulus(n, "Instance");
  require_length(n, raw.size(), "Instance");
  Instance instance;
  instance.n = n;
  instance.values.reserve(raw.size());
  for (const std::int64_t x : raw) {
    instance.values.push_back(reduce(x, n).value);
  }
  return instance;
}

std::size_t Selection::count() const {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
}

std::string Selection::to_mask_string() const {
  std::string out(mask.size(), '0');
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] != 0) {
      out[i] = '1';
    }
  }
  return out;
}

std::vector<std::uint64_t> Selection::to_indices() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] != 0) {
      out.push_back(i + 1);
    }
  }
  return out;
}

SortedView sort_by_residue(std::span<const std::uint64_t> values, std::uint64_t modulus) {
  // Positions fit in 32 bits under the modulus cap, so counts do too.
  std::vector<Position> start(modulus + 1, 0);
  for (const std::uint64_t v : values) {
    ++start[v + 1];
  }
  for (std::uint64_t r = 0; r < modulus; ++r) {
    start[r + 1] += start[r];
  }
  SortedView view;
  view.order.resize(values.size());
  // Forward scan keeps equal residues in input order.
  for (std::size_t i = 0; i < values.size(); ++i) {
    view.order[start[values[i]]++] = static_cast<Position>(i);
  }
  return view;
}

ReachableSet::ReachableSet(std::uint64_t p) : member_(p, 0), parent_(p, kNoParent) {}

void ReachableSet::seed(std::uint64_t residue) {
  if (size_ != 0) {
    throw InvariantError("ReachableSet: seed on a non-empty set");
  }
  member_[residue] = 1;
  size_ = 1;
}

void ReachableSet::insert(std::uint64_t residue, std::uint32_t step) {
  if (member_[residue] != 0) {
    throw InvariantError("ReachableSet: residue " + std::to_string(residue) +
                         " inserted twice");
  }
  member_[residue] = 1;
  parent_[residue] = step;
  ++size_;
}

FindTResult find_t(std::uint64_t p, std::span<const std::uint8_t> member, std::uint64_t d,
                   std::uint64_t u, std::uint64_t v) {
  if (member.size() != p) {
    throw ContractError("find_t: membership table length differs from p");
  }
  if (d % p == 0) {
    throw ContractError("find_t: difference is 0 modulo p");
  }
  if (u >= p || v >= p || member[u] == 0 || member[v] != 0) {
    throw ContractError("find_t: need u in T and v not in T");
  }
  d %= p;
  const std::uint64_t inverse = mod_inverse(d, p);
  const BarrettReducer mod(p);
  // Walk coordinates: x stands for residue x*d mod p. l maps to u, h to v.
  std::uint64_t low = mod.reduce(u * inverse);
  std::uint64_t high = p + mod.reduce(v * inverse);
  FindTResult result;
  while (low + 1 != high) {
    const std::uint64_t mid = low + (high - low) / 2;
    ++result.probes;
    if (member[mod.reduce(mid * d)] != 0) {
      low = mid;
    } else {
      high = mid;
    }
  }
  result.t = mod.reduce(high * d);
  return result;
}

Selection egz_prime(std::uint64_t p, std::span<const std::uint64_t> values,
                    SolveObserver* observer) {
  require_modulus(p, "egz_prime");
  if (!is_prime(p)) {
    throw ContractError("egz_prime: " + std::to_string(p) + " is not prime");
  }
  require_length(p, values.size(), "egz_prime");

  const BarrettReducer mod(p);
  std::vector<std::uint64_t> residues(values.size());
  std::transform(values.begin(), values.end(), residues.begin(),
                 [&mod](std::uint64_t x) { return mod.reduce(x); });

  const SortedView view = sort_by_residue(residues, p);
  if (observer != nullptr) {
    observer->on_sorted(view);
  }
  const auto& order = view.order;
  const auto residue_at = [&](std::size_t sorted_index) { return residues[order[sorted_index]]; };

  Selection selection;
  selection.mask.assign(values.size(), 0);

  // p consecutive sorted entries with equal first and last residue are all equal.
  for (std::size_t i = 0; i < p; ++i) {
    if (residue_at(i) == residue_at(i + p - 1)) {
      if (observer != nullptr) {
        observer->on_run_shortcut(i);
      }
      for (std::size_t j = i; j < i + p; ++j) {
        selection.mask[order[j]] = 1;
      }
      return selection;
    }
  }

  // Step i pairs sorted entries i-1 and i+p-1 (1-based), i.e. 0-based i-2 and p+i-2.
  const auto difference = [&](std::uint32_t step) {
    return residue_at(p + step - 2) - residue_at(step - 2);
  };

  // p residues below p sum to less than p^2 < 2^62.
  std::uint64_t first_sum = 0;
  for (std::size_t j = 0; j < p; ++j) {
    first_sum += residue_at(j);
  }
  const std::uint64_t seed = mod.reduce(first_sum);
  ReachableSet reach(p);
  reach.seed(seed);
  if (observer != nullptr) {
    observer->on_seed(seed);
  }

  for (std::uint32_t step = 2; step <= p && !reach.contains(0); ++step) {
    const std::uint64_t d = difference(step);
    const FindTResult found = find_t(p, reach.membership(), d, seed, 0);
    reach.insert(found.t, step);
    if (observer != nullptr) {
      observer->on_step(step, d, found, reach);
    }
  }
  if (!reach.contains(0)) {
    throw InvariantError("egz_prime: residue 0 unreachable after p steps");
  }

  for (std::size_t j = 0; j < p; ++j) {
    selection.mask[order[j]] = 1;
  }
  // Walk parent pointers from 0 back to the seed, undoing one swap per step.
  std::uint64_t current = 0;
  std::uint64_t walked = 0;
  while (current != seed) {
    const std::uint32_t step = reach.parent(current);
    if (step == ReachableSet::kNoParent || ++walked > p) {
      throw InvariantError("egz_prime: broken parent chain");
    }
    const Position removed = order[step - 2];
    const Position added = order[p + step - 2];
    selection.mask[removed] = 0;
    selection.mask[added] = 1;
    if (observer != nullptr) {
      observer->on_swap(step, removed, added);
    }
    current = sub_mod(current, difference(step), p);
  }
  return selection;
}

Selection egz_composite(std::uint64_t p, std::uint64_t q, std::span<const std::uint64_t> values,
                        SolveObserver* observer) {
  if (p < 2 || q < 2) {
    throw ContractError("egz_composite: factors must be >= 2");
  }
  if (p > kMaxModulus / q) {
    throw ContractError("egz_composite: p*q exceeds 2^31 - 1");
  }
  const std::uint64_t n = p * q;
  require_length(n, values.size(), "egz_composite");

  const BarrettReducer mod(n);
  std::vector<std::uint64_t> residues(values.size());
  std::transform(values.begin(), values.end(), residues.begin(),
                 [&mod](std::uint64_t x) { return mod.reduce(x); });

  const std::size_t group_count = 2 * q - 1;
  std::vector<Position> pool;
  pool.reserve(2 * p - 1);
  for (Position i = 0; i + 1 < p; ++i) {
    pool.push_back(i);
  }

  std::vector<std::vector<Position>> groups(group_count);
  std::vector<std::uint64_t> quotients(group_count);
  std::vector<std::uint64_t> pooled_values;
  std::vector<Position> kept;
  for (std::size_t g = 0; g < group_count; ++g) {
    const auto first_new = static_cast<Position>(p - 1 + g * p);
    for (Position i = first_new; i < first_new + p; ++i) {
      pool.push_back(i);
    }
    pooled_values.clear();
    for (const Position pos : pool) {
      pooled_values.push_back(residues[pos]);
    }
    const Selection inner = egz(p, std::span<const std::uint64_t>(pooled_values));

    kept.clear();
    std::uint64_t group_sum = 0;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (inner.mask[j] != 0) {
        groups[g].push_back(pool[j]);
        group_sum += residues[pool[j]];
      } else {
        kept.push_back(pool[j]);
      }
    }
    pool.swap(kept);
    if (groups[g].size() != p || group_sum % p != 0) {
      throw InvariantError("egz_composite: group " + std::to_string(g) +
                           " is not a zero-sum group of size p");
    }
    quotients[g] = group_sum / p;
    if (observer != nullptr) {
      observer->on_group(g, groups[g], group_sum, quotients[g]);
    }
  }

  const Selection outer = egz(q, std::span<const std::uint64_t>(quotients));
  Selection selection;
  selection.mask.assign(values.size(), 0);
  for (std::size_t g = 0; g < group_count; ++g) {
    if (outer.mask[g] != 0) {
      for (const Position pos : groups[g]) {
        selection.mask[pos] = 1;
      }
    }
  }
  return selection;
}

Selection egz(std::uint64_t n, std::span<const std::uint64_t> values, SolveObserver* observer) {
  require_modulus(n, "egz");
  require_length(n, values.size(), "egz");
  if (n == 1) {
    return Selection{{1}};
  }
  const std::uint64_t p = smallest_prime_factor(n);
  if (p == n) {
    return egz_prime(n, values, observer);
  }
  return egz_composite(p, n / p, values, observer);
}

Selection egz(std::uint64_t n, std::span<const std::int64_t> raw, SolveObserver* observer) {
  const Instance instance = Instance::from_raw(n, raw);
  return egz(instance.n, std::span<const std::uint64_t>(instance.values), observer);
}

Selection egz(const Instance& instance, SolveObserver* observer) {
  return egz(instance.n, std::span<const std::uint64_t>(instance.values), observer);
}

}  // namespace egz
