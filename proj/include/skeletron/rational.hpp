#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skeletron {

/// Exact rational scalar used throughout the library.
using Rational = mpq_class;

/// Raised for malformed input text or values that violate a documented
/// precondition. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// p/q in canonical form (mpq_class's two-argument constructor does not
/// reduce).
Rational make_rational(long num, long den);

/// Parses "p/q" or "p" (optional leading sign, optional surrounding blanks).
Rational parse_rational(std::string_view text);

/// Always emits "p/q" in lowest terms, including integers ("5/1").
std::string format_rational(const Rational& q);

bool is_integer(const Rational& q);

/// Requires is_integer(q) and that the value fits in a long.
long to_long(const Rational& q);

/// An element of Q ∪ {+∞}: the codomain of the valuation.
class ValQ {
 public:
  /// +∞.
  ValQ() = default;
  ValQ(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit by intent
  ValQ(long value) : value_(Rational(value)) {}       // NOLINT

  static ValQ infinity() { return ValQ(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Throws std::logic_error on +∞.
  const Rational& value() const;

  friend bool operator==(const ValQ& a, const ValQ& b);
  friend std::strong_ordering operator<=>(const ValQ& a, const ValQ& b);

  friend ValQ operator+(const ValQ& a, const ValQ& b);

  std::string to_string() const;

 private:
  std::optional<Rational> value_;
};

ValQ min(const ValQ& a, const ValQ& b);
ValQ max(const ValQ& a, const ValQ& b);

std::ostream& operator<<(std::ostream& os, const ValQ& v);

}  // namespace skeletron
