#pragma once

#include <iosfwd>

namespace egz::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidCertificate = 1,
  kUsageError = 2,
  kInternalError = 3,
};

/// Entry point of the `egz` tool with injectable streams.
///   solve [--format mask|indices] [FILE|-]
///   verify INSTANCE CERT
///   gen --n N --seed S --dist uniform|adversarial-equal|two-class
///   bench --n N[,N...] --trials T [--warmup W]
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace egz::cli
