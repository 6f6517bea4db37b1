#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace hecke {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Parses "p", "-p", "p/q".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// Representative of r modulo 1 in [0, 1).
Rational frac(const Rational& r);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace hecke
