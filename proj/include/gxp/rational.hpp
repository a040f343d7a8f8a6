#pragma once

#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <string>

#include "gxp/errors.hpp"

namespace gxp {

// Exact rational arithmetic for every correctness-relevant value
// (conductance, expansion, densities, solution offsets). Floats are kept
// out of comparison paths; they appear only in spectral bounds.
using Rat = boost::rational<std::int64_t>;

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Parses "p/q" or "p".
inline Rat parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    std::int64_t num = std::stoll(s.substr(0, slash));
    std::int64_t den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + s + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("rational out of range '" + s + "'");
  }
}

// Largest rational with the given denominator that does not exceed x.
// Used to turn float spectral bounds into conservative rational ones.
inline Rat rat_floor(double x, std::int64_t den = 1'000'000'000) {
  if (x <= 0) return Rat(0);
  return Rat(static_cast<std::int64_t>(std::floor(x * static_cast<double>(den))), den);
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return (a + b - 1) / b;
}

// ceil(r * k) in exact arithmetic.
inline std::int64_t ceil_mul(const Rat& r, std::int64_t k) {
  return ceil_div(r.numerator() * k, r.denominator());
}

}  // namespace gxp
