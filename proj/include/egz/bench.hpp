#pragma once

// Scaling benchmark: times egz() on uniform instances and emits CSV rows
// "n,kind,trial,elapsed_ns". Only the solve is timed; generation happens
// before the clock starts. Trials run sequentially.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace egz::bench {

struct BenchRecord {
  std::uint64_t n = 0;
  std::string_view kind;  // "prime" | "composite" | "power2"
  std::uint32_t trial = 0;
  std::uint64_t elapsed_ns = 0;
};

struct BenchConfig {
  std::vector<std::uint64_t> moduli;
  std::uint32_t trials = 5;
  std::uint32_t warmup = 0;
};

/// "prime" for primes (including 2), "power2" for 2^k with k >= 2, else "composite".
std::string_view classify(std::uint64_t n);

/// Seed of the instance solved in a given trial; warmup runs use trials >= config.trials.
std::uint64_t trial_seed(std::uint64_t n, std::uint32_t trial);

/// Runs every (n, trial) pair in order; `sink` sees each record as it is produced.
std::vector<BenchRecord> run(const BenchConfig& config,
                             const std::function<void(const BenchRecord&)>& sink = {});

/// Median elapsed time of the records for modulus n.
double median_elapsed_ns(const std::vector<BenchRecord>& records, std::uint64_t n);

inline constexpr std::string_view kCsvHeader = "n,kind,trial,elapsed_ns";
void write_csv_row(std::ostream& out, const BenchRecord& record);

}  // namespace egz::bench
