#include "dgfree/rational.hpp"

#include <cctype>
#include <ostream>

#include "dgfree/errors.hpp"

namespace dgfree {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  bool ok = !t.empty();
  for (size_t i = 0; ok && i < t.size(); ++i) {
    char c = t[i];
    if (c == '-' && i == 0 && t.size() > 1) continue;
    if (!std::isdigit(static_cast<unsigned char>(c))) ok = false;
  }
  if (!ok) throw ParseError("bad rational: '" + std::string(whole) + "'");
  return Integer(t, 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  auto num = parse_int(s.substr(0, slash), text);
  auto den = parse_int(s.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const { return q_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::pow(unsigned e) const {
  Rational r(1), b(*this);
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dgfree
