#include "skeletron/rational.hpp"

#include <cctype>
#include <climits>

namespace skeletron {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational '" + std::string(text) + "' (expected p/q)");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in rational '" + std::string(text) + "'");
  if (!s.empty() && s.front() == '-') n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw std::domain_error("rational " + format_rational(q) + " is not a machine integer");
  }
  return q.get_num().get_si();
}

const Rational& ValQ::value() const {
  if (!value_) throw std::logic_error("ValQ::value() on +inf");
  return *value_;
}

bool operator==(const ValQ& a, const ValQ& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const ValQ& a, const ValQ& b) {
  if (a.is_infinite()) return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  int c = cmp(*a.value_, *b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ValQ operator+(const ValQ& a, const ValQ& b) {
  if (a.is_infinite() || b.is_infinite()) return ValQ::infinity();
  return ValQ(Rational(*a.value_ + *b.value_));
}

std::string ValQ::to_string() const { return value_ ? format_rational(*value_) : "+inf"; }

ValQ min(const ValQ& a, const ValQ& b) { return b < a ? b : a; }
ValQ max(const ValQ& a, const ValQ& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const ValQ& v) { return os << v.to_string(); }

}  // namespace skeletron
