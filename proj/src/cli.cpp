#include "egz/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "egz/bench.hpp"
#include "egz/core.hpp"
#include "egz/generate.hpp"
#include "egz/io.hpp"
#include "egz/oracle.hpp"

namespace egz::cli {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw io::ParseError("cannot open '" + path + "'");
  }
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

int cmd_solve(const std::string& path, const std::string& format, std::istream& in,
              std::ostream& out, std::ostream& err) {
  const io::RawInstance instance = io::parse_instance(slurp(path, in));
  const Selection selection = egz(instance.n, std::span<const std::int64_t>(instance.values));
  if (!oracle::check_selection(instance.n, instance.values, selection)) {
    err << "internal error: solver produced an invalid selection\n";
    return kInternalError;
  }
  out << io::format_selection(selection, format == "indices" ? io::OutputFormat::kIndices
                                                             : io::OutputFormat::kMask)
      << '\n';
  return kOk;
}

int cmd_verify(const std::string& instance_path, const std::string& certificate_path,
               std::istream& in, std::ostream& out, std::ostream& err) {
  if (instance_path == "-" && certificate_path == "-") {
    throw io::ParseError("instance and certificate cannot both come from stdin");
  }
  const io::RawInstance instance = io::parse_instance(slurp(instance_path, in));
  const Selection selection =
      io::parse_certificate(slurp(certificate_path, in), instance.n);
  switch (oracle::classify_selection(instance.n, instance.values, selection)) {
    case oracle::Verdict::kValid:
      out << "valid\n";
      return kOk;
    case oracle::Verdict::kWrongCardinality:
      err << "invalid: cardinality: " << selection.count() << " positions selected, expected "
          << instance.n << '\n';
      return kInvalidCertificate;
    case oracle::Verdict::kNotDivisible:
      err << "invalid: divisibility: selected sum is not a multiple of " << instance.n << '\n';
      return kInvalidCertificate;
  }
  return kInternalError;
}

int cmd_gen(std::uint64_t n, std::uint64_t seed, const std::string& dist, std::ostream& out,
            std::ostream& err) {
  const auto distribution = gen::parse_distribution(dist);
  if (!distribution) {
    err << "error: unknown distribution '" << dist
        << "' (expected uniform, adversarial-equal or two-class)\n";
    return kUsageError;
  }
  if (n == 0 || n > kMaxModulus) {
    err << "error: --n must lie in [1, 2147483647]\n";
    return kUsageError;
  }
  io::write_instance(out, gen::generate(n, seed, *distribution));
  return kOk;
}

int cmd_bench(const bench::BenchConfig& config, std::ostream& out) {
  out << bench::kCsvHeader << '\n';
  bench::run(config, [&out](const bench::BenchRecord& record) {
    bench::write_csv_row(out, record);
    out.flush();
  });
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Zero-sum subsequence solver (Erdos-Ginzburg-Ziv)", "egz"};
  app.require_subcommand(1);

  std::string solve_format = "mask";
  std::string solve_path = "-";
  auto* solve = app.add_subcommand("solve", "Find n of the 2n-1 values summing to 0 mod n");
  solve->add_option("--format", solve_format, "Output format")
      ->check(CLI::IsMember({"mask", "indices"}));
  solve->add_option("file", solve_path, "Instance file, or - for stdin");

  std::string verify_instance;
  std::string verify_certificate;
  auto* verify = app.add_subcommand("verify", "Check a certificate against an instance");
  verify->add_option("instance", verify_instance, "Instance file")->required();
  verify->add_option("certificate", verify_certificate, "Mask or index-list file")->required();

  std::uint64_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_dist = "uniform";
  auto* generate = app.add_subcommand("gen", "Emit a seeded random instance");
  generate->add_option("--n", gen_n, "Modulus")->required();
  generate->add_option("--seed", gen_seed, "Seed");
  generate->add_option("--dist", gen_dist, "uniform | adversarial-equal | two-class");

  bench::BenchConfig bench_config;
  auto* benchmark = app.add_subcommand("bench", "Time the solver, CSV on stdout");
  benchmark->add_option("--n", bench_config.moduli, "Moduli, comma separated")
      ->required()
      ->delimiter(',');
  benchmark->add_option("--trials", bench_config.trials, "Timed solves per modulus")
      ->check(CLI::PositiveNumber);
  benchmark->add_option("--warmup", bench_config.warmup, "Untimed solves per modulus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*solve) {
      return cmd_solve(solve_path, solve_format, in, out, err);
    }
    if (*verify) {
      return cmd_verify(verify_instance, verify_certificate, in, out, err);
    }
    if (*generate) {
      return cmd_gen(gen_n, gen_seed, gen_dist, out, err);
    }
    return cmd_bench(bench_config, out);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::bad_alloc&) {
    err << "internal error: out of memory\n";
    return kInternalError;
  }
}

}  // namespace egz::cli
