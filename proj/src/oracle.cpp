#include "egz/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace egz::oracle {

namespace {

std::uint64_t residue_of(std::int64_t x, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((x % sm) + sm) % sm);
}

void require_prime_input(std::uint64_t p, std::size_t length, const char* who) {
  if (p < 2 || p > kMaxModulus || !is_prime(p)) {
    throw ContractError(std::string(who) + ": modulus must be prime");
  }
  if (length != 2 * p - 1) {
    throw ContractError(std::string(who) + ": expected 2p-1 values");
  }
}

}  // namespace

ResidueSet oplus(const ResidueSet& s, std::uint64_t p, std::uint64_t a) {
  if (s.size() != p || a >= p) {
    throw ContractError("oplus: bad modulus or shift");
  }
  if (set_size(s) == 0) {
    throw ContractError("oplus: empty set");
  }
  ResidueSet out = s;
  for (std::uint64_t x = 0; x < p; ++x) {
    if (s[x]) {
      out[(x + a) % p] = true;
    }
  }
  return out;
}

std::size_t set_size(const ResidueSet& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), true));
}

ExplicitSetState build_explicit_sets(std::uint64_t p, std::span<const std::int64_t> raw) {
  require_prime_input(p, raw.size(), "build_explicit_sets");
  ExplicitSetState state;
  state.p = p;

  std::vector<std::uint64_t> residues(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    residues[i] = residue_of(raw[i], p);
  }
  state.sorted.resize(raw.size());
  std::iota(state.sorted.begin(), state.sorted.end(), Position{0});
  std::stable_sort(state.sorted.begin(), state.sorted.end(),
                   [&](Position x, Position y) { return residues[x] < residues[y]; });
  const auto b = [&](std::size_t i) { return residues[state.sorted[i - 1]]; };  // 1-based

  for (std::size_t i = 1; i <= p - 1; ++i) {
    if (b(i) == b(i + p)) {
      state.run_start = i - 1;
      return state;
    }
  }

  for (std::size_t i = 1; i <= p - 1; ++i) {
    state.differences.push_back((b(i + p) + p - b(i)) % p);
  }

  std::uint64_t seed = 0;
  for (std::size_t j = 1; j <= p; ++j) {
    seed = (seed + b(j)) % p;
  }
  state.provenance.assign(p, std::nullopt);
  ResidueSet first(p, false);
  first[seed] = true;
  state.provenance[seed] = Provenance{0, seed};
  state.sets.push_back(std::move(first));

  for (std::uint32_t i = 2; i <= p; ++i) {
    const std::uint64_t d = state.differences[i - 2];
    const ResidueSet& previous = state.sets.back();
    ResidueSet next = oplus(previous, p, d);
    for (std::uint64_t x = 0; x < p; ++x) {
      if (next[x] && !previous[x] && !state.provenance[x]) {
        state.provenance[x] = Provenance{i, (x + p - d) % p};
      }
    }
    state.sets.push_back(std::move(next));
  }
  return state;
}

Selection solve_prime_quadratic(std::uint64_t p, std::span<const std::int64_t> raw) {
  const ExplicitSetState state = build_explicit_sets(p, raw);
  Selection selection;
  selection.mask.assign(raw.size(), 0);
  if (state.run_start) {
    for (std::size_t j = *state.run_start; j < *state.run_start + p; ++j) {
      selection.mask[state.sorted[j]] = 1;
    }
    return selection;
  }
  if (!state.sets.back()[0]) {
    throw InvariantError("solve_prime_quadratic: 0 not in S_p");
  }
  for (std::size_t j = 0; j < p; ++j) {
    selection.mask[state.sorted[j]] = 1;
  }
  std::uint64_t current = 0;
  while (state.provenance[current]->step != 0) {
    const Provenance& from = *state.provenance[current];
    // Step i replaces b_{i-1} by b_{i-1+p} (1-based).
    selection.mask[state.sorted[from.step - 2]] = 0;
    selection.mask[state.sorted[from.step - 2 + p]] = 1;
    current = from.predecessor;
  }
  return selection;
}

std::optional<Selection> solve_exhaustive(std::uint64_t n, std::span<const std::int64_t> raw) {
  if (n == 0 || n > kExhaustiveCap) {
    throw ContractError("solve_exhaustive: n must lie in [1, 12]");
  }
  if (raw.size() != 2 * n - 1) {
    throw ContractError("solve_exhaustive: expected 2n-1 values");
  }
  // Masks in descending lexicographic order = combinations in ascending
  // lexicographic order of positions.
  std::vector<std::uint8_t> mask(raw.size(), 0);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(n), 1);
  do {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (mask[i] != 0) {
        sum += residue_of(raw[i], n);
      }
    }
    if (sum % n == 0) {
      return Selection{mask};
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return std::nullopt;
}

Verdict classify_selection(std::uint64_t n, std::span<const std::int64_t> raw,
                           const Selection& selection) {
  if (n == 0 || raw.size() != 2 * n - 1 || selection.mask.size() != raw.size()) {
    throw ContractError("check_selection: lengths must all equal 2n-1");
  }
  std::uint64_t ones = 0;
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (selection.mask[i] > 1) {
      throw ContractError("check_selection: mask entries must be 0 or 1");
    }
    if (selection.mask[i] == 1) {
      ++ones;
      sum = (sum + residue_of(raw[i], n)) % n;
    }
  }
  if (ones != n) {
    return Verdict::kWrongCardinality;
  }
  return sum == 0 ? Verdict::kValid : Verdict::kNotDivisible;
}

bool check_selection(std::uint64_t n, std::span<const std::int64_t> raw,
                     const Selection& selection) {
  return classify_selection(n, raw, selection) == Verdict::kValid;
}

}  // namespace egz::oracle
