#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace paretoscope {

/// Arbitrary-precision exact rational. All arithmetic in the library goes
/// through this type, so no comparison ever depends on rounding.
using Rational = boost::multiprecision::cpp_rational;

/// Parses `12`, `-3`, `1.25`, `.5` or `p/q`. Returns nullopt on anything else
/// (including a zero denominator).
std::optional<Rational> try_parse_rational(std::string_view text);

/// Throwing variant of try_parse_rational; raises ParseError.
Rational parse_rational(std::string_view text);

/// `p/q` in lowest terms, or the bare integer when q = 1.
std::string to_string(const Rational& value);

int sign(const Rational& value);

/// A non-negative commodity amount.
class Quantity {
 public:
  Quantity() = default;
  Quantity(const Rational& value);  // NOLINT: implicit by design of the value type
  Quantity(long long value) : Quantity(Rational(value)) {}  // NOLINT
  Quantity(int value) : Quantity(Rational(value)) {}        // NOLINT

  static Quantity parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const Quantity& a, const Quantity& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Quantity& a, const Quantity& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend Quantity operator+(const Quantity& a, const Quantity& b) {
    return Quantity(a.value_ + b.value_);
  }
  Quantity& operator+=(const Quantity& other) {
    value_ += other.value_;
    return *this;
  }

 private:
  Rational value_{0};
};

std::string to_string(const Quantity& q);

}  // namespace paretoscope
