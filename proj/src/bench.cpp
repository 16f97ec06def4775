#include "egz/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "egz/core.hpp"
#include "egz/generate.hpp"
#include "egz/oracle.hpp"

namespace egz::bench {

std::string_view classify(std::uint64_t n) {
  if (is_prime(n)) {
    return "prime";
  }
  if (n >= 4 && (n & (n - 1)) == 0) {
    return "power2";
  }
  return "composite";
}

std::uint64_t trial_seed(std::uint64_t n, std::uint32_t trial) {
  // splitmix64 finaliser over (n, trial).
  std::uint64_t z = n * 0x9E3779B97F4A7C15ULL + trial;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::uint64_t timed_solve(const io::RawInstance& instance) {
  const Instance reduced = Instance::from_raw(instance.n, instance.values);
  const auto start = std::chrono::steady_clock::now();
  const Selection selection = egz(reduced);
  const auto stop = std::chrono::steady_clock::now();
  if (!oracle::check_selection(instance.n, instance.values, selection)) {
    throw InvariantError("bench: solver returned an invalid selection");
  }
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(ns));
}

}  // namespace

std::vector<BenchRecord> run(const BenchConfig& config,
                             const std::function<void(const BenchRecord&)>& sink) {
  if (config.trials == 0) {
    throw ContractError("bench: trials must be >= 1");
  }
  std::vector<BenchRecord> records;
  for (const std::uint64_t n : config.moduli) {
    if (n < 2 || n > kMaxModulus) {
      throw ContractError("bench: n must lie in [2, 2^31 - 1]");
    }
    for (std::uint32_t w = 0; w < config.warmup; ++w) {
      timed_solve(gen::generate(n, trial_seed(n, config.trials + w), gen::Distribution::kUniform));
    }
    for (std::uint32_t trial = 0; trial < config.trials; ++trial) {
      const auto instance = gen::generate(n, trial_seed(n, trial), gen::Distribution::kUniform);
      BenchRecord record{n, classify(n), trial, timed_solve(instance)};
      if (sink) {
        sink(record);
      }
      records.push_back(record);
    }
  }
  return records;
}

double median_elapsed_ns(const std::vector<BenchRecord>& records, std::uint64_t n) {
  std::vector<double> times;
  for (const auto& r : records) {
    if (r.n == n) {
      times.push_back(static_cast<double>(r.elapsed_ns));
    }
  }
  if (times.empty()) {
    return 0.0;
  }
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  return times.size() % 2 == 1 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
}

void write_csv_row(std::ostream& out, const BenchRecord& record) {
  out << record.n << ',' << record.kind << ',' << record.trial << ',' << record.elapsed_ns
      << '\n';
}

}  // namespace egz::bench
