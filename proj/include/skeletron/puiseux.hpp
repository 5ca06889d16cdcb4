#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "skeletron/rational.hpp"

namespace skeletron {

/// A finite Puiseux sum  Σ c_q t^q  with rational coefficients and rational
/// exponents. Stands in for an element of the complete algebraically closed
/// field K; the valuation is the least exponent present.
///
/// Canonical form is maintained by every operation: no zero coefficients are
/// stored and exponents are kept in ascending order, so equality is
/// syntactic.
class Puiseux {
 public:
  using TermMap = std::map<Rational, Rational>;  // exponent -> coefficient

  /// The zero element.
  Puiseux() = default;
  explicit Puiseux(const Rational& constant);
  explicit Puiseux(long constant) : Puiseux(Rational(constant)) {}

  static Puiseux monomial(const Rational& coeff, const Rational& exponent);
  /// The uniformizer t.
  static Puiseux t() { return monomial(1, 1); }
  static Puiseux from_terms(const TermMap& terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ValQ valuation() const;
  /// Coefficient of the least exponent. Throws on zero.
  const Rational& leading_coefficient() const;

  /// Drops every monomial whose exponent is >= s.
  Puiseux truncated_below(const Rational& s) const;

  Puiseux operator-() const;
  Puiseux& operator+=(const Puiseux& other);
  Puiseux& operator-=(const Puiseux& other);
  Puiseux& operator*=(const Puiseux& other);

  friend Puiseux operator+(Puiseux a, const Puiseux& b) { return a += b; }
  friend Puiseux operator-(Puiseux a, const Puiseux& b) { return a -= b; }
  friend Puiseux operator*(const Puiseux& a, const Puiseux& b);

  friend bool operator==(const Puiseux& a, const Puiseux& b) = default;
  /// Total order (lexicographic on the term list); only used for
  /// deterministic sorting, carries no field meaning.
  friend std::strong_ordering operator<=>(const Puiseux& a, const Puiseux& b);

  /// Text form, e.g. "1 - 2*t^(1/2) + t^(3)".
  std::string to_string() const;
  /// Accepts "0", bare constants, "t", "c*t^(p/q)", "t^-2", sums and
  /// differences of such terms.
  static Puiseux parse(std::string_view text);

 private:
  void add_term(const Rational& exponent, const Rational& coeff);

  TermMap terms_;
};

Puiseux add(const Puiseux& a, const Puiseux& b);
Puiseux mul(const Puiseux& a, const Puiseux& b);
ValQ valuation(const Puiseux& a);

std::ostream& operator<<(std::ostream& os, const Puiseux& a);

}  // namespace skeletron
