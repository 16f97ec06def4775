#pragma once

// Seeded instance generators. Randomness comes from std::mt19937_64 (its output
// sequence is fixed by the C++ standard) and is mapped to [0, n) with the
// multiply-shift rule floor(x * n / 2^64), so instances reproduce bit-for-bit
// on every platform.

#include <cstdint>
#include <optional>
#include <string_view>

#include "egz/io.hpp"

namespace egz::gen {

enum class Distribution {
  kUniform,           // independent uniform residues
  kAdversarialEqual,  // at least n copies of one residue, rest uniform
  kTwoClass,          // residues drawn from {0, 1}
};

std::optional<Distribution> parse_distribution(std::string_view name);
std::string_view distribution_name(Distribution distribution);

io::RawInstance generate(std::uint64_t n, std::uint64_t seed, Distribution distribution);

}  // namespace egz::gen
