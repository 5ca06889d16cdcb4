#include "skeletron/tropical.hpp"

#include <algorithm>
#include <set>

namespace skeletron {

TropicalLaurent::TropicalLaurent(TermMap terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw InputError("tropical Laurent series needs at least one term");
}

std::vector<int> TropicalLaurent::minimizers(const Rational& s) const {
  std::vector<int> out;
  Rational best;
  for (const auto& [n, v] : terms_) {
    Rational value = v + n * s;
    if (out.empty() || value < best) {
      out.assign(1, n);
      best = value;
    } else if (value == best) {
      out.push_back(n);
    }
  }
  return out;
}

Rational eval_trop(const TropicalLaurent& f, const Rational& s) {
  auto it = f.terms().begin();
  Rational best = it->second + it->first * s;
  for (++it; it != f.terms().end(); ++it) {
    Rational value = it->second + it->first * s;
    if (value < best) best = value;
  }
  return best;
}

Interval::Interval(std::optional<Rational> lo, std::optional<Rational> hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_ && lo_closed), hi_closed_(hi_ && hi_closed) {
  if (lo_ && hi_ && *hi_ < *lo_) {
    throw InputError("interval with lo " + format_rational(*lo_) + " > hi " + format_rational(*hi_));
  }
}

bool Interval::in_interior(const Rational& s) const {
  return (!lo_ || *lo_ < s) && (!hi_ || s < *hi_);
}

bool Interval::contains(const Rational& s) const {
  bool above_lo = !lo_ || *lo_ < s || (lo_closed_ && *lo_ == s);
  bool below_hi = !hi_ || s < *hi_ || (hi_closed_ && *hi_ == s);
  return above_lo && below_hi;
}

ValQ Interval::length() const {
  if (!lo_ || !hi_) return ValQ::infinity();
  return ValQ(Rational(*hi_ - *lo_));
}

namespace {

// Where lines a and b of the lower envelope cross; requires a.first > b.first.
Rational crossing(const std::pair<int, Rational>& a, const std::pair<int, Rational>& b) {
  return Rational((b.second - a.second) / (a.first - b.first));
}

}  // namespace

std::vector<Breakpoint> breakpoints(const TropicalLaurent& f, const Interval& interval) {
  // Lines by decreasing slope; the hull sweep keeps only envelope pieces.
  std::vector<std::pair<int, Rational>> hull;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    std::pair<int, Rational> line(it->first, it->second);
    while (hull.size() >= 2 &&
           crossing(hull[hull.size() - 2], line) <= crossing(hull[hull.size() - 2], hull.back())) {
      hull.pop_back();
    }
    hull.push_back(std::move(line));
  }
  std::vector<Breakpoint> out;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    Rational s = crossing(hull[i], hull[i + 1]);
    if (interval.in_interior(s)) out.push_back({s, hull[i].first, hull[i + 1].first});
  }
  return out;
}

int left_slope(const TropicalLaurent& f, const Rational& s) { return f.minimizers(s).back(); }
int right_slope(const TropicalLaurent& f, const Rational& s) { return f.minimizers(s).front(); }

std::vector<Breakpoint> quotient_breakpoints(const TropicalLaurent& num, const TropicalLaurent& den,
                                             const Interval& interval) {
  std::set<Rational> candidates;
  for (const auto& b : breakpoints(num, interval)) candidates.insert(b.s);
  for (const auto& b : breakpoints(den, interval)) candidates.insert(b.s);
  std::vector<Breakpoint> out;
  for (const Rational& s : candidates) {
    int sl = left_slope(num, s) - left_slope(den, s);
    int sr = right_slope(num, s) - right_slope(den, s);
    if (sl != sr) out.push_back({s, sl, sr});
  }
  return out;
}

int slope_change_count(std::span<const ZeroPole> zeros_poles, const Rational& s) {
  int count = 0;
  for (const auto& zp : zeros_poles) {
    if (zp.multiplicity == 0) throw InputError("zero/pole with multiplicity 0");
    if (zp.valuation == s) count -= zp.multiplicity;
  }
  return count;
}

std::optional<UnitData> unit_decomposition(const TropicalLaurent& f, const Interval& interval) {
  // The set where one term is the strict minimizer is convex, so it is
  // enough to find the same strict minimizer at (or next to) both ends.
  auto at_end = [&](const std::optional<Rational>& bound, bool closed, bool is_lo) -> std::optional<int> {
    if (!bound) return is_lo ? f.terms().rbegin()->first : f.terms().begin()->first;
    std::vector<int> m = f.minimizers(*bound);
    if (closed) {
      if (m.size() != 1) return std::nullopt;
      return m.front();
    }
    return is_lo ? m.front() : m.back();
  };
  std::optional<int> from_lo = at_end(interval.lo(), interval.lo_closed(), true);
  std::optional<int> from_hi = at_end(interval.hi(), interval.hi_closed(), false);
  if (!from_lo || !from_hi || *from_lo != *from_hi) return std::nullopt;
  return UnitData{*from_lo, f.terms().at(*from_lo)};
}

Interval map_skeleton(int degree, const Rational& val_alpha, const Interval& interval) {
  if (degree == 0) throw InputError("map_skeleton: degree 0 does not induce a finite morphism");
  auto image = [&](const std::optional<Rational>& s) -> std::optional<Rational> {
    if (!s) return std::nullopt;
    return Rational(degree * *s + val_alpha);
  };
  if (degree > 0) {
    return Interval(image(interval.lo()), image(interval.hi()), interval.lo_closed(), interval.hi_closed());
  }
  return Interval(image(interval.hi()), image(interval.lo()), interval.hi_closed(), interval.lo_closed());
}

LaurentPolynomial::LaurentPolynomial(const Puiseux& constant) {
  if (!constant.is_zero()) coeffs_.emplace(0, constant);
}

LaurentPolynomial LaurentPolynomial::monomial(const Puiseux& coeff, int exponent) {
  LaurentPolynomial p;
  if (!coeff.is_zero()) p.coeffs_.emplace(exponent, coeff);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_coefficients(const CoeffMap& coeffs) {
  LaurentPolynomial p;
  for (const auto& [n, c] : coeffs) p += monomial(c, n);
  return p;
}

LaurentPolynomial LaurentPolynomial::linear(const Puiseux& c) {
  return monomial(Puiseux(1), 1) + LaurentPolynomial(c);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [n, c] : other.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(n, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial p;
  for (const auto& [na, ca] : a.coeffs_) {
    for (const auto& [nb, cb] : b.coeffs_) p += LaurentPolynomial::monomial(ca * cb, na + nb);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
  LaurentPolynomial result(Puiseux(1));
  LaurentPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

TropicalLaurent LaurentPolynomial::tropicalize() const {
  TropicalLaurent::TermMap terms;
  for (const auto& [n, c] : coeffs_) terms.emplace(n, c.valuation().value());
  return TropicalLaurent(std::move(terms));
}

}  // namespace skeletron
