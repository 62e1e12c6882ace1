#include "invmaxian/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "invmaxian/error.hpp"

namespace invmaxian {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidVertex: return "INVALID_VERTEX";
    case ErrorCode::NotALeaf: return "NOT_A_LEAF";
    case ErrorCode::InvalidInstance: return "VALIDATION_ERROR";
    case ErrorCode::EmptySet: return "EMPTY_SET";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::SizeLimitExceeded: return "SIZE_LIMIT_EXCEEDED";
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::Internal: return "INTERNAL_ERROR";
  }
  return "UNKNOWN";
}

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::Parse, "not a rational number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

Rational parse_decimal(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) bad_number(original);
    exponent = std::strtol(std::string(exp_part).c_str(), nullptr, 10);
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_number(original);
  }
  if (int_part.empty() && frac_part.empty()) bad_number(original);
  if (!int_part.empty() && !all_digits(int_part)) bad_number(original);

  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class numerator(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  Rational value;
  if (exponent >= 0) {
    value = Rational(numerator * pow10(static_cast<unsigned long>(exponent)));
  } else {
    value = Rational(numerator, pow10(static_cast<unsigned long>(-exponent)));
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

mpz_class parse_integer(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) bad_number(original);
  mpz_class v(std::string(text), 10);
  return negative ? mpz_class(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad_number(original);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), original);
    mpz_class den = parse_integer(text.substr(slash + 1), original);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(original) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  return parse_decimal(text, original);
}

std::string to_string(const Rational& value) { return value.get_str(10); }

bool has_finite_decimal(const Rational& value) {
  mpz_class den = value.get_den();
  for (unsigned long p : {2UL, 5UL}) {
    while (mpz_divisible_ui_p(den.get_mpz_t(), p) != 0) den /= p;
  }
  return den == 1;
}

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  const bool negative = sgn(value) < 0;
  Rational magnitude = abs(value);
  const mpz_class scale = pow10(static_cast<unsigned long>(digits));
  // round half up on the magnitude
  mpz_class scaled = (magnitude.get_num() * scale * 2 + magnitude.get_den()) / (magnitude.get_den() * 2);
  std::string s = scaled.get_str(10);
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (negative && s != "0") s.insert(0, "-");
  return s;
}

Rational sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace invmaxian
