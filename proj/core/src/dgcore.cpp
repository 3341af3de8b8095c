#include "dgfree/dgcore.hpp"

#include "dgfree/errors.hpp"

namespace dgfree {

MatrixTuple::MatrixTuple(std::vector<RatMatrix> matrices) : ms_(std::move(matrices)) {
  n_ = static_cast<int>(ms_.size());
  if (n_ < 1) throw DimensionMismatch("tuple needs at least one matrix");
  for (const auto& m : ms_)
    if (m.rows() != n_ || m.cols() != n_)
      throw DimensionMismatch("tuple of " + std::to_string(n_) + " matrices must be " +
                              std::to_string(n_) + "x" + std::to_string(n_));
}

MatrixTuple MatrixTuple::zero(int n) {
  return MatrixTuple(std::vector<RatMatrix>(static_cast<size_t>(n), RatMatrix(n, n)));
}

RatMatrix crisscross_block(const MatrixTuple& t, int i, int j) {
  const int n = t.n();
  RatMatrix T(n, n);
  const RatMatrix& Mi = t.M(i);
  for (int k = 1; k <= n; ++k) {
    const RatMatrix& Mk = t.M(k);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        // column j of M^k times row k of M^i, minus column k of M^i times row j of M^k
        T(a, b) += Mk(a, j - 1) * Mi(k - 1, b) - Mi(a, k - 1) * Mk(j - 1, b);
      }
  }
  return T;
}

bool is_crisscross(const MatrixTuple& t) {
  for (int i = 1; i <= t.n(); ++i)
    for (int j = 1; j <= t.n(); ++j)
      if (!crisscross_block(t, i, j).is_zero()) return false;
  return true;
}

Element generator_differential(const MatrixTuple& t, int i) {
  if (i < 1 || i > t.n()) throw DomainError("generator index out of range");
  Element e(t.n());
  for (int j = 1; j <= t.n(); ++j)
    for (int k = 1; k <= t.n(); ++k) e.add_term(Word{j, k}, t.m(i, j, k));
  return e;
}

void differential_word(const MatrixTuple& t, const Word& w, const Rational& c, Element& out) {
  const auto& L = w.letters();
  const int n = t.n();
  std::vector<std::uint16_t> buf(L.size() + 1);
  for (size_t p = 0; p < L.size(); ++p) {
    Rational sc = (p % 2 == 0) ? c : -c;  // (-1)^{p-1} with 1-based p
    std::copy(L.begin(), L.begin() + static_cast<long>(p), buf.begin());
    std::copy(L.begin() + static_cast<long>(p) + 1, L.end(), buf.begin() + static_cast<long>(p) + 2);
    const RatMatrix& Mi = t.M(L[p]);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (Mi(j, k).is_zero()) continue;
        buf[p] = static_cast<std::uint16_t>(j + 1);
        buf[p + 1] = static_cast<std::uint16_t>(k + 1);
        out.add_term(Word(buf), sc * Mi(j, k));
      }
  }
}

Element differential(const MatrixTuple& t, const Element& a) {
  if (a.n() != t.n()) throw DimensionMismatch("element and tuple over different generator counts");
  Element out(t.n());
  for (const auto& [w, c] : a.terms()) differential_word(t, w, c, out);
  return out;
}

bool d_squared_is_zero(const MatrixTuple& t, int up_to_degree) {
  if (up_to_degree < 1) throw DomainError("d_squared_is_zero needs a degree cap >= 1");
  for (int d = 1; d <= up_to_degree; ++d)
    for (const auto& w : basis_words(t.n(), d)) {
      Element once(t.n());
      differential_word(t, w, Rational(1), once);
      if (!differential(t, once).is_zero()) return false;
    }
  return true;
}

MatrixTuple random_tuple(int n, int bound, std::uint64_t seed) {
  if (n < 1) throw DomainError("random_tuple needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<RatMatrix> ms;
  for (int i = 0; i < n; ++i) {
    RatMatrix m(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m(j, k) = Rational(rng.in_range(bound));
    ms.push_back(std::move(m));
  }
  return MatrixTuple(std::move(ms));
}

DGFreeAlgebra::DGFreeAlgebra(MatrixTuple t) : t_(std::move(t)) {
  if (!is_crisscross(t_)) throw NotCrisscross();
}

}  // namespace dgfree
