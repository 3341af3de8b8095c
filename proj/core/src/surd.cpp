#include "dgfree/surd.hpp"

#include "dgfree/errors.hpp"

namespace dgfree {

Surd::Surd(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
  if (!b_.is_zero() && (d_ == 0 || d_ == 1)) throw DomainError("bad radicand");
  tidy();
}

void Surd::tidy() {
  if (b_.is_zero()) d_ = 0;
}

Surd Surd::sqrt(const Rational& r) {
  if (r.is_zero()) return Surd(0);
  // sqrt(p/q) = sqrt(p*q)/q, then pull square factors out of p*q
  Integer m = r.numerator() * r.denominator();
  Integer q = r.denominator();
  if (mpz_perfect_square_p(m.get_mpz_t()) && m > 0) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    return Surd(Rational(root, q));
  }
  Integer sign = m < 0 ? -1 : 1;
  Integer rest = abs(m), out = 1;
  for (Integer p = 2; p * p <= rest && p < 1000000; ++p) {
    Integer pp = p * p;
    while (rest % pp == 0) {
      rest /= pp;
      out *= p;
    }
  }
  Integer d = sign * rest;
  if (d == 1) return Surd(Rational(out, q));
  return Surd(Rational(0), Rational(out, q), d);
}

Rational Surd::to_rational() const {
  if (!is_rational()) throw DomainError("irrational value " + str());
  return a_;
}

Integer Surd::join(const Surd& o) const {
  if (b_.is_zero()) return o.d_;
  if (o.b_.is_zero()) return d_;
  if (d_ != o.d_) throw DomainError("mixed quadratic extensions");
  return d_;
}

Surd& Surd::operator+=(const Surd& o) {
  d_ = join(o);
  a_ += o.a_;
  b_ += o.b_;
  tidy();
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  d_ = join(o);
  a_ -= o.a_;
  b_ -= o.b_;
  tidy();
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  Integer d = join(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  tidy();
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  if (o.a_.is_zero() && o.b_.is_zero()) throw DomainError("division by zero");
  // multiply by the conjugate; the norm a^2 - b^2 d is nonzero since d is not a square
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(o.d_);
  Surd conj(o.a_ / norm, -o.b_ / norm, o.d_);
  return *this *= conj;
}

std::string Surd::str() const {
  if (b_.is_zero()) return a_.str();
  std::string rad = "sqrt(" + d_.get_str() + ")";
  std::string bs = b_.is_one() ? rad : (b_ == Rational(-1) ? "-" + rad : b_.str() + "*" + rad);
  if (a_.is_zero()) return bs;
  if (b_.sign() < 0) {
    Rational nb = -b_;
    return a_.str() + " - " + (nb.is_one() ? rad : nb.str() + "*" + rad);
  }
  return a_.str() + " + " + bs;
}

}  // namespace dgfree
