#include "egz/io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace egz::io {

namespace {

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  bool line_start = true;
  bool in_comment = false;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '\n') {
      line_start = true;
      in_comment = false;
      ++pos;
      continue;
    }
    if (in_comment || c == ' ' || c == '\t' || c == '\r') {
      ++pos;
      continue;
    }
    if (line_start && c == '#') {
      in_comment = true;
      ++pos;
      continue;
    }
    line_start = false;
    const std::size_t begin = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\r' &&
           text[pos] != '\n') {
      ++pos;
    }
    tokens.push_back(text.substr(begin, pos - begin));
  }
  return tokens;
}

template <typename T>
T parse_number(std::string_view token, const char* what) {
  T value{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') {
    ++first;
  }
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

RawInstance parse_instance(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) {
    throw ParseError("empty instance");
  }
  RawInstance instance;
  instance.n = parse_number<std::uint64_t>(tokens[0], "modulus");
  if (instance.n == 0 || instance.n > kMaxModulus) {
    throw ParseError("modulus must lie in [1, 2147483647]");
  }
  const std::uint64_t expected = 2 * instance.n - 1;
  if (tokens.size() - 1 != expected) {
    throw ParseError("expected " + std::to_string(expected) + " values after n = " +
                     std::to_string(instance.n) + ", found " + std::to_string(tokens.size() - 1));
  }
  instance.values.reserve(expected);
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    instance.values.push_back(parse_number<std::int64_t>(tokens[i], "value"));
  }
  return instance;
}

RawInstance read_instance(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) {
    throw ParseError("read error");
  }
  return parse_instance(text);
}

void write_instance(std::ostream& out, const RawInstance& instance) {
  std::string line = std::to_string(instance.n);
  line += '\n';
  for (std::size_t i = 0; i < instance.values.size(); ++i) {
    if (i != 0) {
      line += ' ';
    }
    line += std::to_string(instance.values[i]);
  }
  line += '\n';
  out << line;
}

Selection parse_certificate(std::string_view text, std::uint64_t n) {
  const auto tokens = tokenize(text);
  const std::uint64_t length = 2 * n - 1;
  if (tokens.empty()) {
    throw ParseError("empty certificate");
  }
  Selection selection;
  selection.mask.assign(length, 0);

  const bool binary_token =
      tokens.size() == 1 &&
      tokens[0].find_first_not_of("01") == std::string_view::npos;
  if (binary_token && tokens[0].size() == length) {
    for (std::size_t i = 0; i < length; ++i) {
      selection.mask[i] = tokens[0][i] == '1' ? 1 : 0;
    }
    return selection;
  }
  if (binary_token && tokens[0].size() > 1 && tokens[0].front() == '0') {
    throw ParseError("mask has length " + std::to_string(tokens[0].size()) + ", expected " +
                     std::to_string(length));
  }
  for (const auto token : tokens) {
    const auto index = parse_number<std::uint64_t>(token, "index");
    if (index < 1 || index > length) {
      throw ParseError("index " + std::to_string(index) + " outside [1, " +
                       std::to_string(length) + "]");
    }
    if (selection.mask[index - 1] != 0) {
      throw ParseError("index " + std::to_string(index) + " repeated");
    }
    selection.mask[index - 1] = 1;
  }
  return selection;
}

std::string format_selection(const Selection& selection, OutputFormat format) {
  if (format == OutputFormat::kMask) {
    return selection.to_mask_string();
  }
  std::string out;
  for (const std::uint64_t index : selection.to_indices()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(index);
  }
  return out;
}

}  // namespace egz::io
