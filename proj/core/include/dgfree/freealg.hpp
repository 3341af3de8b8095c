#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgfree/rational.hpp"

namespace dgfree {

// A monomial x_{i1}...x_{id}; letters are 1-based generator indices.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint16_t> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<int> letters);

  int degree() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int operator[](int p) const { return letters_[static_cast<size_t>(p)]; }
  const std::vector<std::uint16_t>& letters() const { return letters_; }

  Word operator*(const Word& o) const;
  std::string str() const;  // "x1.x2", "1" for the empty word

  friend bool operator==(const Word&, const Word&) = default;
  // degree first, then lexicographic
  friend bool operator<(const Word& a, const Word& b) {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
    return a.letters_ < b.letters_;
  }

 private:
  std::vector<std::uint16_t> letters_;
};

class Element {
 public:
  using Terms = std::map<Word, Rational>;

  explicit Element(int n);
  Element(int n, const Word& w, const Rational& c = Rational(1));

  static Element zero(int n) { return Element(n); }
  static Element one(int n) { return Element(n, Word{}); }
  static Element generator(int n, int i);
  static Element parse(int n, std::string_view text);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Word& w) const;

  void add_term(const Word& w, const Rational& c);

  Element homogeneous_component(int d) const;
  bool is_homogeneous() const;
  // degree of a nonzero homogeneous element
  std::optional<int> degree() const;
  int max_degree() const;  // -1 for zero

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);

  std::string str() const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  int n_;
  Terms terms_;
};

Element add(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator*(const Rational& c, const Element& a);

// n^d words of length d in lexicographic order.
std::vector<Word> basis_words(int n, int d);
// position of w inside basis_words(n, w.degree())
std::size_t word_index(int n, const Word& w);
Word word_at(int n, int d, std::size_t index);

std::size_t ipow(std::size_t base, int e);

}  // namespace dgfree
