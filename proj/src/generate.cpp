#include "egz/generate.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace egz::gen {

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

}  // namespace

std::optional<Distribution> parse_distribution(std::string_view name) {
  if (name == "uniform") {
    return Distribution::kUniform;
  }
  if (name == "adversarial-equal") {
    return Distribution::kAdversarialEqual;
  }
  if (name == "two-class") {
    return Distribution::kTwoClass;
  }
  return std::nullopt;
}

std::string_view distribution_name(Distribution distribution) {
  switch (distribution) {
    case Distribution::kUniform:
      return "uniform";
    case Distribution::kAdversarialEqual:
      return "adversarial-equal";
    case Distribution::kTwoClass:
      return "two-class";
  }
  return "uniform";
}

io::RawInstance generate(std::uint64_t n, std::uint64_t seed, Distribution distribution) {
  if (n == 0 || n > kMaxModulus) {
    throw ContractError("generate: n must lie in [1, 2^31 - 1]");
  }
  std::mt19937_64 rng(seed);
  io::RawInstance instance;
  instance.n = n;
  const std::uint64_t length = 2 * n - 1;
  instance.values.resize(length);

  switch (distribution) {
    case Distribution::kUniform:
      for (auto& v : instance.values) {
        v = static_cast<std::int64_t>(bounded(rng, n));
      }
      break;
    case Distribution::kTwoClass:
      for (auto& v : instance.values) {
        v = static_cast<std::int64_t>(bounded(rng, std::min<std::uint64_t>(n, 2)));
      }
      break;
    case Distribution::kAdversarialEqual: {
      const auto repeated = static_cast<std::int64_t>(bounded(rng, n));
      const std::uint64_t copies = n + bounded(rng, n);
      for (std::uint64_t i = 0; i < length; ++i) {
        instance.values[i] =
            i < copies ? repeated : static_cast<std::int64_t>(bounded(rng, n));
      }
      // Fisher-Yates with the same bounded mapping; std::shuffle is not portable.
      for (std::uint64_t i = length - 1; i > 0; --i) {
        std::swap(instance.values[i], instance.values[bounded(rng, i + 1)]);
      }
      break;
    }
  }
  return instance;
}

}  // namespace egz::gen
