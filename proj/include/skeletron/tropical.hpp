#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skeletron/puiseux.hpp"
#include "skeletron/rational.hpp"

namespace skeletron {

/// Newton-polygon shadow of a Laurent series Σ a_n T^n on an annulus: the
/// finite set of pairs (n, val a_n) with a_n != 0.
///
/// In the skeleton coordinate s = val(T), the valuation of the sup norm is
/// T(s) = min_n (v_n + n s), a minimum of affine functions with integer
/// slopes.
class TropicalLaurent {
 public:
  using TermMap = std::map<int, Rational>;  // exponent n -> v_n

  /// Throws InputError when `terms` is empty.
  explicit TropicalLaurent(TermMap terms);

  const TermMap& terms() const { return terms_; }

  /// Exponents of the terms attaining the minimum at s (ascending).
  std::vector<int> minimizers(const Rational& s) const;

 private:
  TermMap terms_;
};

Rational eval_trop(const TropicalLaurent& f, const Rational& s);

/// Interval of the skeleton coordinate. A missing bound is -∞ (lo) or +∞
/// (hi). Degenerate [c, c] is legal.
class Interval {
 public:
  Interval(std::optional<Rational> lo, std::optional<Rational> hi, bool lo_closed = true, bool hi_closed = true);

  static Interval closed(const Rational& lo, const Rational& hi) { return Interval(lo, hi, true, true); }
  static Interval whole_line() { return Interval(std::nullopt, std::nullopt, false, false); }

  const std::optional<Rational>& lo() const { return lo_; }
  const std::optional<Rational>& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  bool in_interior(const Rational& s) const;
  bool contains(const Rational& s) const;
  /// hi - lo, or +∞ for unbounded intervals. This is the modulus of the
  /// corresponding annulus.
  ValQ length() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  std::optional<Rational> lo_;
  std::optional<Rational> hi_;
  bool lo_closed_;
  bool hi_closed_;
};

/// A point where the minimizing exponent changes. Slopes are read in the
/// direction of increasing s, so slope_left > slope_right always.
struct Breakpoint {
  Rational s;
  int slope_left;
  int slope_right;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Breakpoints of s -> eval_trop(f, s) in the interior of `interval`,
/// ascending.
std::vector<Breakpoint> breakpoints(const TropicalLaurent& f, const Interval& interval);

/// Breakpoints of the difference num(s) - den(s), the valuation of a
/// quotient of two Laurent series. Points where the slope changes of the
/// two parts cancel are not reported. Here slopes need not decrease.
std::vector<Breakpoint> quotient_breakpoints(const TropicalLaurent& num, const TropicalLaurent& den,
                                             const Interval& interval);

/// Slope of s -> eval_trop(f, s) just left / right of s.
int left_slope(const TropicalLaurent& f, const Rational& s);
int right_slope(const TropicalLaurent& f, const Rational& s);

/// A zero (multiplicity > 0) or pole (multiplicity < 0) seen through its
/// valuation.
struct ZeroPole {
  Rational valuation;
  int multiplicity;
};

/// (#poles - #zeros) with valuation exactly s, with multiplicity. With
/// F(s) = val f on the skeleton this is F'(s+) - F'(s-).
int slope_change_count(std::span<const ZeroPole> zeros_poles, const Rational& s);

/// Degree and leading valuation of a unit α·T^d·(1 + g), |g| < 1.
struct UnitData {
  int degree;
  Rational val_alpha;

  friend bool operator==(const UnitData&, const UnitData&) = default;
};

/// Present iff a single term strictly minimizes v_n + n s for every s of
/// the interval (closed ends included). Otherwise f has a zero on the
/// annulus or on a boundary circle.
std::optional<UnitData> unit_decomposition(const TropicalLaurent& f, const Interval& interval);

/// Image of the skeleton interval under the unit map: s -> d s + val_alpha.
/// Throws InputError for d = 0 (the induced map is not finite).
Interval map_skeleton(int degree, const Rational& val_alpha, const Interval& interval);

/// Laurent polynomial in one variable with Puiseux coefficients. Used to
/// expand factored functions and read off their Newton polygons.
class LaurentPolynomial {
 public:
  using CoeffMap = std::map<int, Puiseux>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(const Puiseux& constant);
  static LaurentPolynomial monomial(const Puiseux& coeff, int exponent);
  static LaurentPolynomial from_coefficients(const CoeffMap& coeffs);
  /// X + c.
  static LaurentPolynomial linear(const Puiseux& c);

  const CoeffMap& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial pow(unsigned exponent) const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// (n, val a_n) for every nonzero coefficient. Throws on the zero
  /// polynomial.
  TropicalLaurent tropicalize() const;

 private:
  CoeffMap coeffs_;
};

}  // namespace skeletron
