#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "egz/core.hpp"
#include "egz/oracle.hpp"
#include "test_support.hpp"

using egz::ContractError;
using egz::oracle::ResidueSet;
using egz::testing::mask_from_string;
using egz::testing::random_raw;

namespace {

ResidueSet set_of(std::uint64_t p, std::initializer_list<std::uint64_t> xs) {
  ResidueSet s(p, false);
  for (const auto x : xs) {
    s[x] = true;
  }
  return s;
}

bool is_small_prime(std::uint64_t n) { return n >= 2 && egz::smallest_prime_factor(n) == n; }

}  // namespace

TEST_CASE("oplus examples") {
  CHECK(egz::oracle::oplus(set_of(5, {1}), 5, 0) == set_of(5, {1}));
  CHECK(egz::oracle::oplus(set_of(5, {1}), 5, 3) == set_of(5, {1, 4}));
  CHECK(egz::oracle::oplus(set_of(5, {0, 1, 2, 3, 4}), 5, 2) == set_of(5, {0, 1, 2, 3, 4}));
  CHECK_THROWS_AS(egz::oracle::oplus(ResidueSet(5, false), 5, 1), ContractError);
  CHECK_THROWS_AS(egz::oracle::oplus(set_of(5, {1}), 5, 5), ContractError);
}

TEST_CASE("oplus strictly grows proper subsets") {
  std::mt19937_64 rng(17);
  for (const std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 101ULL}) {
    for (int round = 0; round < 500; ++round) {
      ResidueSet s(p, false);
      std::bernoulli_distribution coin(static_cast<double>(rng() % 100) / 100.0);
      for (std::uint64_t x = 0; x < p; ++x) {
        s[x] = coin(rng);
      }
      s[rng() % p] = true;
      const auto size = egz::oracle::set_size(s);
      if (size == p) {
        continue;
      }
      const std::uint64_t a = 1 + rng() % (p - 1);
      const auto grown = egz::oracle::oplus(s, p, a);
      REQUIRE(egz::oracle::set_size(grown) > size);
      for (std::uint64_t x = 0; x < p; ++x) {
        if (s[x]) {
          REQUIRE(grown[x]);
        }
      }
    }
  }
}

TEST_CASE("explicit sets grow by at least one per step") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (std::uint64_t p = 2; p <= 101; ++p) {
    if (!is_small_prime(p)) {
      continue;
    }
    for (int round = 0; round < 30; ++round) {
      const auto raw = round % 2 == 0 ? random_raw(p, rng)
                                      : egz::testing::clustered_raw(p, 2, rng);
      const auto state = egz::oracle::build_explicit_sets(p, raw);
      if (state.run_start) {
        continue;
      }
      ++checked;
      REQUIRE(state.sets.size() == p);
      REQUIRE(egz::oracle::set_size(state.sets[0]) == 1);
      for (std::size_t i = 1; i <= p; ++i) {
        REQUIRE(egz::oracle::set_size(state.sets[i - 1]) >= i);
        if (i >= 2) {
          REQUIRE(state.sets[i - 1] ==
                  egz::oracle::oplus(state.sets[i - 2], p, state.differences[i - 2]));
        }
      }
      REQUIRE(egz::oracle::set_size(state.sets.back()) == p);
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("solve_prime_quadratic examples") {
  const std::vector<std::int64_t> worked{0, 1, 6, 2, 7, 3, 8, 4, 9};
  CHECK(egz::oracle::check_selection(5, worked, egz::oracle::solve_prime_quadratic(5, worked)));

  const std::vector<std::int64_t> two{0, 1, 1};
  const auto sel2 = egz::oracle::solve_prime_quadratic(2, two);
  CHECK(egz::oracle::check_selection(2, two, sel2));
  CHECK(sel2.to_mask_string() == "011");

  const std::vector<std::int64_t> ones(5, 1);
  CHECK(egz::oracle::solve_prime_quadratic(3, ones).count() == 3);

  CHECK_THROWS_AS(egz::oracle::solve_prime_quadratic(4, std::vector<std::int64_t>(7, 0)),
                  ContractError);
  CHECK_THROWS_AS(egz::oracle::solve_prime_quadratic(5, two), ContractError);
}

TEST_CASE("solve_exhaustive examples") {
  CHECK(egz::oracle::solve_exhaustive(1, std::vector<std::int64_t>{7})->to_mask_string() == "1");
  CHECK(egz::oracle::solve_exhaustive(2, std::vector<std::int64_t>{1, 1, 0})->to_mask_string() ==
        "110");
  CHECK(egz::oracle::solve_exhaustive(3, std::vector<std::int64_t>{0, 1, 2, 4, 5})
            ->to_mask_string() == "11100");
  // First two 3-subsets sum to 2; {1, 2, 5} is the first hit.
  CHECK(egz::oracle::solve_exhaustive(3, std::vector<std::int64_t>{1, 1, 0, 0, 1})
            ->to_mask_string() == "11001");
  CHECK_THROWS_AS(egz::oracle::solve_exhaustive(13, std::vector<std::int64_t>(25, 0)),
                  ContractError);
  CHECK_THROWS_AS(egz::oracle::solve_exhaustive(3, std::vector<std::int64_t>(4, 0)),
                  ContractError);
}

TEST_CASE("check_selection examples") {
  const std::vector<std::int64_t> worked{0, 1, 6, 2, 7, 3, 8, 4, 9};
  CHECK(egz::oracle::check_selection(5, worked, mask_from_string("101010101")));
  CHECK_FALSE(egz::oracle::check_selection(5, worked, mask_from_string("101010100")));
  CHECK(egz::oracle::classify_selection(5, worked, mask_from_string("101010100")) ==
        egz::oracle::Verdict::kWrongCardinality);
  CHECK(egz::oracle::classify_selection(5, worked, mask_from_string("111110000")) ==
        egz::oracle::Verdict::kNotDivisible);
  CHECK_FALSE(
      egz::oracle::check_selection(2, std::vector<std::int64_t>{1, 1, 0}, mask_from_string("101")));
  CHECK_THROWS_AS(egz::oracle::check_selection(5, worked, mask_from_string("1010")),
                  ContractError);
}

TEST_CASE("oracles and solver agree on tiny instances") {
  std::mt19937_64 rng(99);
  for (std::uint64_t n = 1; n <= egz::oracle::kExhaustiveCap; ++n) {
    for (int round = 0; round < 60; ++round) {
      const auto raw = random_raw(n, rng);
      const auto fast = egz::egz(n, std::span<const std::int64_t>(raw));
      REQUIRE(egz::oracle::check_selection(n, raw, fast));
      const auto brute = egz::oracle::solve_exhaustive(n, raw);
      REQUIRE(brute.has_value());
      REQUIRE(egz::oracle::check_selection(n, raw, *brute));
      if (is_small_prime(n)) {
        REQUIRE(egz::oracle::check_selection(n, raw, egz::oracle::solve_prime_quadratic(n, raw)));
      }
    }
  }
}

TEST_CASE("exhaustive search always finds a solution on clustered inputs") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const std::uint64_t n = 1 + rng() % egz::oracle::kExhaustiveCap;
    REQUIRE(egz::oracle::solve_exhaustive(n, egz::testing::clustered_raw(n, 2, rng)).has_value());
  }
}
