#include "bigraph/scalar.hpp"

#include "bigraph/error.hpp"

#include <cctype>

namespace bigraph {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError(InputErrorKind::Malformed, "malformed rational '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) {
    throw InputError(InputErrorKind::Malformed, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_string(const Integer& value) { return value.str(); }

Integer floor(const Rational& value) {
  Integer n = numerator(value);
  Integer d = denominator(value);
  Integer q = n / d;  // truncates toward zero
  if (q * d != n && n < 0) q -= 1;
  return q;
}

Integer ceil(const Rational& value) { return -floor(Rational(-value)); }

std::string to_decimal(const Rational& value, int places) {
  Integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Rational scaled = abs(value) * scale;
  Integer units = floor(scaled + Rational(1, 2));
  std::string digits = units.str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out;
  if (value < 0 && units != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - static_cast<std::size_t>(places));
  }
  return out;
}

Rational power_of_two(int k) {
  Integer p = 1;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) p *= 2;
  return k < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace bigraph
