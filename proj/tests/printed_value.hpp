#pragma once
// Comparison against numbers printed with two significant digits. The printed tables mix
// rounding (5.17 shown as 5.2) and truncation (5.25 shown as 5.2), so a value matches
// when either rendering reproduces the printed mantissa.

#include <cmath>

namespace printed {

/// `log10_value` is the base-10 logarithm of the computed quantity; the printed number is
/// mantissa x 10^exponent with one decimal in the mantissa.
inline bool matches_two_digits(double log10_value, double mantissa, int exponent) {
  const double scaled = std::pow(10.0, log10_value - exponent);
  const double tenths = scaled * 10.0;
  const double target = std::round(mantissa * 10.0);
  return std::round(tenths) == target || std::floor(tenths) == target;
}

/// Same rule for a plain value and a printed mantissa/exponent pair with `digits`
/// significant digits.
inline bool matches(double value, double mantissa, int exponent, int digits = 2) {
  if (!(value > 0.0)) return false;
  const double unit = std::pow(10.0, digits - 1);
  const double scaled = value / std::pow(10.0, exponent) * unit;
  const double target = std::round(mantissa * unit);
  return std::round(scaled) == target || std::floor(scaled) == target;
}

}  // namespace printed
