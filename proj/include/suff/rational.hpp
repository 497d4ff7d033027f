#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace suff {

/// Exact rational in lowest terms. All numeric rules are evaluated with this
/// type; there is no floating point anywhere in the library.
using Rational = boost::rational<std::int64_t>;

/// Parses "p/q", "p" or "-p/q". Throws Error(InvalidInput) on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace suff
