#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dgfree/matrix.hpp"
#include "dgfree/rational.hpp"

namespace dgfree {

// Sorted (index, value) pairs, no stored zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<SparseVec> columns;  // columns[j] holds column j

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  RatMatrix to_dense() const;
  static SparseMatrix from_dense(const RatMatrix& m);
  bool is_zero() const;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseVec apply(const SparseMatrix& m, const SparseVec& v);

// Semi-echelon row basis: every row has a distinct leading index, scaled to 1.
// reduce() clears every pivot position of a vector, which gives the unique
// representative of v modulo the span with zeros on the pivot set.
// Indices >= pivot_limit are carried along but never used as pivots
// (the tracking trick for kernels and solves).
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim, std::size_t pivot_limit = SIZE_MAX);

  SparseVec reduce(const SparseVec& v) const;
  // true when v was independent (the reduced vector is stored)
  bool insert(const SparseVec& v);
  // inserts an already reduced vector whose pivot part is nonzero
  void insert_reduced(SparseVec r);
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  bool is_pivot(std::size_t col) const { return col < pivot_row_.size() && pivot_row_[col] >= 0; }

 private:
  std::size_t dim_, limit_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivot_row_;
};

std::size_t rank(const SparseMatrix& m);

struct KernelResult {
  std::size_t rank = 0;
  std::vector<SparseVec> kernel;  // vector k_j has entry 1 at j, others at indices < j
};
KernelResult kernel_basis(const SparseMatrix& m);

// coefficients c with sum c_i gens[i] == target, or nullopt
std::optional<std::vector<Rational>> solve_combination(const std::vector<SparseVec>& gens,
                                                       const SparseVec& target, std::size_t dim);

// Fraction-free Bareiss elimination (denominators cleared row by row).
std::size_t bareiss_rank(const RatMatrix& m);
Rational bareiss_determinant(const RatMatrix& m);

SparseVec sparse_axpy(const SparseVec& x, const Rational& c, const SparseVec& y);  // x + c*y
SparseVec sparse_scale(const SparseVec& x, const Rational& c);

}  // namespace dgfree
