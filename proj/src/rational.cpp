#include "suff/rational.hpp"

#include <charconv>

#include "suff/error.hpp"

namespace suff {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::int64_t num = parse_integer(text.substr(0, slash), text);
  std::int64_t den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1), text);
  }
  if (den == 0) {
    throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

}  // namespace suff
