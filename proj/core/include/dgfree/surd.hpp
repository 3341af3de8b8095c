#pragma once

#include <string>

#include "dgfree/rational.hpp"

namespace dgfree {

// a + b*sqrt(d) in a single quadratic extension Q(sqrt d), d a squarefree
// integer other than 0, 1. d == 0 marks a plain rational. Mixing two
// different radicands throws.
class Surd {
 public:
  Surd() = default;
  Surd(int v) : a_(v) {}                 // NOLINT
  Surd(const Rational& v) : a_(v) {}     // NOLINT
  Surd(const Rational& a, const Rational& b, const Integer& d);

  // sqrt of a rational; rational when r is a square
  static Surd sqrt(const Rational& r);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }
  Rational to_rational() const;  // throws unless is_rational()

  Surd operator-() const { return Surd(-a_, -b_, d_); }
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);
  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }
  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
  }

  std::string str() const;

 private:
  Integer join(const Surd& o) const;
  void tidy();

  Rational a_, b_;
  Integer d_ = 0;
};

}  // namespace dgfree
