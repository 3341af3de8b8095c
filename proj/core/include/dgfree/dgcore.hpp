#pragma once

#include <cstdint>
#include <vector>

#include "dgfree/freealg.hpp"
#include "dgfree/matrix.hpp"

namespace dgfree {

// (M^1, ..., M^n); m^i_{jk} is row j, column k of M^i (all 1-based in the
// accessors below, 0-based inside the RatMatrix).
class MatrixTuple {
 public:
  MatrixTuple() = default;
  explicit MatrixTuple(std::vector<RatMatrix> matrices);
  static MatrixTuple zero(int n);

  int n() const { return n_; }
  const RatMatrix& M(int i) const { return ms_.at(static_cast<size_t>(i - 1)); }
  const std::vector<RatMatrix>& matrices() const { return ms_; }
  const Rational& m(int i, int j, int k) const { return M(i)(j - 1, k - 1); }

  friend bool operator==(const MatrixTuple&, const MatrixTuple&) = default;

 private:
  int n_ = 0;
  std::vector<RatMatrix> ms_;
};

// T(i,j) = sum_k (c_j^k r_k^i - c_k^i r_j^k); zero for all i,j iff crisscross
RatMatrix crisscross_block(const MatrixTuple& t, int i, int j);
bool is_crisscross(const MatrixTuple& t);

Element generator_differential(const MatrixTuple& t, int i);
Element differential(const MatrixTuple& t, const Element& a);
// differential of one word, accumulated into out with coefficient c
void differential_word(const MatrixTuple& t, const Word& w, const Rational& c, Element& out);
bool d_squared_is_zero(const MatrixTuple& t, int up_to_degree);

// SplitMix64, the generator behind random_tuple
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // uniform-ish integer in [-bound, bound]
  long in_range(long bound) {
    if (bound <= 0) return 0;
    return static_cast<long>(next() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  }

 private:
  std::uint64_t s_;
};

MatrixTuple random_tuple(int n, int bound, std::uint64_t seed);

class DGFreeAlgebra {
 public:
  explicit DGFreeAlgebra(MatrixTuple t);  // throws NotCrisscross
  const MatrixTuple& tuple() const { return t_; }
  int n() const { return t_.n(); }
  Element d(const Element& a) const { return differential(t_, a); }

 private:
  MatrixTuple t_;
};

}  // namespace dgfree
