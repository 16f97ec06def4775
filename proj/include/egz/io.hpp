#pragma once

// Text formats used by the command-line tool.
//
// Instance file: whitespace-separated tokens, lines whose first non-blank
// character is '#' are comments. The first token is n, followed by exactly
// 2n-1 signed decimal integers.
//
// Certificate: either a single 0/1 token of length 2n-1 (mask) or a list of
// distinct 1-based indices in [1, 2n-1].

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "egz/core.hpp"

namespace egz::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RawInstance {
  std::uint64_t n = 1;
  std::vector<std::int64_t> values;
};

RawInstance parse_instance(std::string_view text);
RawInstance read_instance(std::istream& in);

void write_instance(std::ostream& out, const RawInstance& instance);

/// Accepts mask or index-list form. Throws ParseError when malformed.
Selection parse_certificate(std::string_view text, std::uint64_t n);

enum class OutputFormat { kMask, kIndices };

std::string format_selection(const Selection& selection, OutputFormat format);

}  // namespace egz::io
