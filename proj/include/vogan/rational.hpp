#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace vogan {

using Rational = boost::rational<std::int64_t>;

// "p" or "p/q" with optional leading sign.
std::optional<Rational> parse_rational(std::string_view text);
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

}  // namespace vogan
