#include "skeletron/puiseux.hpp"

#include <cctype>
#include <sstream>

namespace skeletron {

Puiseux::Puiseux(const Rational& constant) {
  if (constant != 0) terms_.emplace(Rational(0), constant);
}

Puiseux Puiseux::monomial(const Rational& coeff, const Rational& exponent) {
  Puiseux p;
  if (coeff != 0) p.terms_.emplace(exponent, coeff);
  return p;
}

Puiseux Puiseux::from_terms(const TermMap& terms) {
  Puiseux p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void Puiseux::add_term(const Rational& exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ValQ Puiseux::valuation() const {
  if (terms_.empty()) return ValQ::infinity();
  return ValQ(terms_.begin()->first);
}

const Rational& Puiseux::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero");
  return terms_.begin()->second;
}

Puiseux Puiseux::truncated_below(const Rational& s) const {
  Puiseux p;
  for (auto it = terms_.begin(); it != terms_.end() && it->first < s; ++it) p.terms_.insert(*it);
  return p;
}

Puiseux Puiseux::operator-() const {
  Puiseux p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Puiseux& Puiseux::operator+=(const Puiseux& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Puiseux& Puiseux::operator-=(const Puiseux& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Puiseux operator*(const Puiseux& a, const Puiseux& b) {
  Puiseux p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  }
  return p;
}

Puiseux& Puiseux::operator*=(const Puiseux& other) { return *this = *this * other; }

std::strong_ordering operator<=>(const Puiseux& a, const Puiseux& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (int c = cmp(ia->first, ib->first); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(ia->second, ib->second); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (ia == a.terms_.end() && ib == b.terms_.end()) return std::strong_ordering::equal;
  return ia == a.terms_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

namespace {

std::string short_rational(const Rational& q) {
  return is_integer(q) ? q.get_num().get_str() : format_rational(q);
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Puiseux parse() {
    Puiseux result;
    skip_ws();
    if (at_end()) fail("empty element");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      result += term(sign);
      first = false;
      skip_ws();
    }
    return result;
  }

 private:
  Puiseux term(int sign) {
    Rational coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = unsigned_rational();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        skip_ws();
        if (at_end() || peek() != 't') fail("expected 't' after '*'");
      }
    }
    Rational exponent = 0;
    if (!at_end() && peek() == 't') {
      get();
      exponent = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        get();
        skip_ws();
        exponent = signed_exponent();
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or 't'");
    }
    return Puiseux::monomial(sign * coeff, exponent);
  }

  Rational signed_exponent() {
    bool paren = !at_end() && peek() == '(';
    if (paren) {
      get();
      skip_ws();
    }
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) sign = get() == '-' ? -1 : 1;
    skip_ws();
    Rational e = sign * unsigned_rational();
    if (paren) {
      skip_ws();
      if (at_end() || get() != ')') fail("expected ')'");
    }
    return e;
  }

  Rational unsigned_rational() {
    std::string digits = integer_digits();
    if (!at_end() && peek() == '/') {
      get();
      digits += "/" + integer_digits();
    }
    return parse_rational(digits);
  }

  std::string integer_digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    if (out.empty()) fail("expected digits");
    return out;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse field element '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Puiseux::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << short_rational(mag);
      continue;
    }
    if (mag != 1) os << short_rational(mag) << '*';
    os << 't';
    if (e != 1) os << "^(" << short_rational(e) << ')';
  }
  return os.str();
}

Puiseux Puiseux::parse(std::string_view text) { return TermParser(text).parse(); }

Puiseux add(const Puiseux& a, const Puiseux& b) { return a + b; }
Puiseux mul(const Puiseux& a, const Puiseux& b) { return a * b; }
ValQ valuation(const Puiseux& a) { return a.valuation(); }

std::ostream& operator<<(std::ostream& os, const Puiseux& a) { return os << a.to_string(); }

}  // namespace skeletron
