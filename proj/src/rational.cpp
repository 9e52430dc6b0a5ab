#include "paretoscope/rational.hpp"

#include <cctype>

#include "paretoscope/error.hpp"

namespace paretoscope {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

cpp_int to_int(std::string_view digits) {
  cpp_int out = 0;
  for (char c : digits) out = out * 10 + (c - '0');
  return out;
}

}  // namespace

std::optional<Rational> try_parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    const cpp_int d = to_int(den);
    if (d == 0) return std::nullopt;
    value = Rational(to_int(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) return std::nullopt;
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const cpp_int w = whole.empty() ? cpp_int(0) : to_int(whole);
    value = Rational(w * scale + to_int(frac), scale);
  } else {
    if (!all_digits(text)) return std::nullopt;
    value = Rational(to_int(text));
  }
  return negative ? Rational(-value) : value;
}

Rational parse_rational(std::string_view text) {
  if (auto v = try_parse_rational(text)) return *v;
  throw ParseError("not a rational number: '" + std::string(text) + "'", 0, 1);
}

std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

int sign(const Rational& value) { return value.sign(); }

Quantity::Quantity(const Rational& value) : value_(value) {
  if (value_ < 0) {
    throw Error(Errc::InvalidArgument, "quantity must be non-negative, got " + to_string(value_));
  }
}

Quantity Quantity::parse(std::string_view text) {
  const Rational v = parse_rational(text);
  if (v < 0) throw ParseError("quantity must be non-negative: '" + std::string(text) + "'", 0, 1);
  return Quantity(v);
}

std::string to_string(const Quantity& q) { return to_string(q.value()); }

}  // namespace paretoscope
