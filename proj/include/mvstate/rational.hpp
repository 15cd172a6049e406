#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "mvstate/errors.hpp"

namespace mvstate {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // row-major
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

inline Integer lcm_of(Integer a, Integer b) { return std::lcm(a, b); }

/// "p/q" with q > 0 and gcd(p, q) = 1. Integers keep the "/1".
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts "p/q", "p", and an optional leading sign.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> Integer {
    if (s.empty()) throw InputError("malformed rational '" + std::string(text) + "'");
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
      negative = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw InputError("malformed rational '" + std::string(text) + "'");
    Integer value = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw InputError("malformed rational '" + std::string(text) + "'");
      value = value * 10 + (s[i] - '0');
    }
    return negative ? -value : value;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace mvstate
