#include "dgfree/freealg.hpp"

#include <cctype>

#include "dgfree/errors.hpp"

namespace dgfree {

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int l : letters) {
    if (l < 1) throw DomainError("generator index must be >= 1");
    letters_.push_back(static_cast<std::uint16_t>(l));
  }
}

Word Word::operator*(const Word& o) const {
  std::vector<std::uint16_t> v;
  v.reserve(letters_.size() + o.letters_.size());
  v.insert(v.end(), letters_.begin(), letters_.end());
  v.insert(v.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(v));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (size_t p = 0; p < letters_.size(); ++p) {
    if (p) s += '.';
    s += 'x';
    s += std::to_string(letters_[p]);
  }
  return s;
}

Element::Element(int n) : n_(n) {
  if (n < 1) throw DomainError("generator count must be >= 1");
}

Element::Element(int n, const Word& w, const Rational& c) : Element(n) { add_term(w, c); }

Element Element::generator(int n, int i) {
  if (i < 1 || i > n) throw DomainError("generator index out of range");
  return Element(n, Word{i});
}

Rational Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  for (auto l : w.letters())
    if (l > n_) throw DimensionMismatch("word " + w.str() + " uses a generator beyond n");
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::homogeneous_component(int d) const {
  Element r(n_);
  for (const auto& [w, c] : terms_)
    if (w.degree() == d) r.terms_.emplace(w, c);
  return r;
}

bool Element::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::optional<int> Element::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.degree();
}

int Element::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

Element Element::operator-() const {
  Element r(*this);
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& o) {
  if (o.n_ != n_) throw DimensionMismatch("elements over different generator counts");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.n_ != n_) throw DimensionMismatch("elements over different generator counts");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (w.empty())
      s += a.str();
    else if (a.is_one())
      s += w.str();
    else
      s += a.str() + " * " + w.str();
  }
  return s;
}

namespace {

struct Scanner {
  std::string_view s;
  size_t pos = 0;

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    ws();
    return pos >= s.size();
  }
  char peek() {
    ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool digit() {
    ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  std::string digits() {
    ws();
    size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return std::string(s.substr(b, pos - b));
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("element text '" + std::string(s) + "': " + what + " at offset " +
                     std::to_string(pos));
  }
};

Word parse_word(Scanner& sc, int n) {
  std::vector<std::uint16_t> letters;
  for (;;) {
    if (sc.peek() != 'x') sc.fail("expected generator");
    ++sc.pos;
    auto d = sc.digits();
    if (d.empty()) sc.fail("expected generator index");
    long i = std::stol(d);
    if (i < 1 || i > n) sc.fail("generator index out of range");
    letters.push_back(static_cast<std::uint16_t>(i));
    if (sc.peek() != '.') break;
    ++sc.pos;
  }
  return Word(std::move(letters));
}

}  // namespace

Element Element::parse(int n, std::string_view text) {
  Element r(n);
  Scanner sc{text};
  if (sc.at_end()) sc.fail("empty");
  bool first = true;
  while (!sc.at_end()) {
    int sign = 1;
    char c = sc.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++sc.pos;
    } else if (!first) {
      sc.fail("expected '+' or '-'");
    }
    first = false;
    Rational coef(1);
    Word w;
    if (sc.digit()) {
      auto num = sc.digits();
      std::string lit = num;
      if (sc.peek() == '/') {
        ++sc.pos;
        auto den = sc.digits();
        if (den.empty()) sc.fail("expected denominator");
        lit += "/" + den;
      }
      coef = Rational::parse(lit);
      if (sc.peek() == '*') {
        ++sc.pos;
        if (sc.peek() == '1') {
          ++sc.pos;
        } else {
          w = parse_word(sc, n);
        }
      }
    } else if (sc.peek() == 'x') {
      w = parse_word(sc, n);
    } else {
      sc.fail("expected term");
    }
    r.add_term(w, sign < 0 ? -coef : coef);
  }
  return r;
}

Element add(const Element& a, const Element& b) {
  Element r(a);
  r += b;
  return r;
}

Element mul(const Element& a, const Element& b) {
  if (a.n() != b.n()) throw DimensionMismatch("elements over different generator counts");
  Element r(a.n());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) r.add_term(wa * wb, ca * cb);
  return r;
}

Element operator+(const Element& a, const Element& b) { return add(a, b); }
Element operator-(const Element& a, const Element& b) {
  Element r(a);
  r -= b;
  return r;
}
Element operator*(const Element& a, const Element& b) { return mul(a, b); }
Element operator*(const Rational& c, const Element& a) {
  Element r(a);
  r *= c;
  return r;
}

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<Word> basis_words(int n, int d) {
  if (n < 1 || d < 0) throw DomainError("basis_words needs n >= 1, d >= 0");
  std::size_t count = ipow(static_cast<std::size_t>(n), d);
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(word_at(n, d, i));
  return out;
}

std::size_t word_index(int n, const Word& w) {
  std::size_t idx = 0;
  for (auto l : w.letters()) idx = idx * static_cast<std::size_t>(n) + (l - 1u);
  return idx;
}

Word word_at(int n, int d, std::size_t index) {
  std::vector<std::uint16_t> letters(static_cast<size_t>(d));
  for (int p = d - 1; p >= 0; --p) {
    letters[static_cast<size_t>(p)] = static_cast<std::uint16_t>(index % n + 1);
    index /= n;
  }
  return Word(std::move(letters));
}

}  // namespace dgfree
