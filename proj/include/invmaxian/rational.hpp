#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invmaxian {

/// Exact arbitrary-precision rational; always kept in canonical form.
using Rational = mpq_class;

/// Parses "7", "-3", "2.125", "1e-3", "3/4" or "-10/6" into an exact value.
/// Throws Error{Parse} on anything else.
[[nodiscard]] Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
[[nodiscard]] std::string to_string(const Rational& value);

/// Decimal rendering rounded to `digits` fractional digits, trailing zeros
/// stripped. Exact whenever the expansion terminates within `digits`.
[[nodiscard]] std::string to_decimal(const Rational& value, int digits = 6);

/// True when the decimal expansion of `value` terminates.
[[nodiscard]] bool has_finite_decimal(const Rational& value);

[[nodiscard]] inline double to_double(const Rational& value) { return value.get_d(); }

[[nodiscard]] Rational sum(std::span<const Rational> values);

[[nodiscard]] inline std::vector<Rational> zeros(std::size_t n) {
  return std::vector<Rational>(n, Rational(0));
}

}  // namespace invmaxian
