#pragma once

#include "dgfree/dgcore.hpp"
#include "dgfree/matrix.hpp"
#include "dgfree/surd.hpp"

namespace dgfree {

using SurdMatrix = Matrix<Surd>;

// Invertible n x n rational matrix; row convention f(x_i) = sum_j a_ij y_j.
class WitnessMatrix {
 public:
  explicit WitnessMatrix(RatMatrix a);  // throws DomainError when singular
  static WitnessMatrix identity(int n) { return WitnessMatrix(RatMatrix::identity(n)); }

  int n() const { return a_.rows(); }
  const RatMatrix& entries() const { return a_; }
  WitnessMatrix inverse() const;
  // A certifies m ~ t, B certifies t ~ u  =>  A*B certifies m ~ u
  friend WitnessMatrix operator*(const WitnessMatrix& a, const WitnessMatrix& b) {
    return WitnessMatrix(a.a_ * b.a_);
  }
  friend bool operator==(const WitnessMatrix&, const WitnessMatrix&) = default;

 private:
  RatMatrix a_;
};

SurdMatrix to_surd(const RatMatrix& m);
std::optional<RatMatrix> to_rational(const SurdMatrix& m);

// sum_j a_ij N^j == A^T M^i A for every i, no crisscross precondition
template <class T>
bool witness_equations_hold(const std::vector<Matrix<T>>& M, const std::vector<Matrix<T>>& N,
                            const Matrix<T>& A) {
  const int n = A.rows();
  Matrix<T> At = A.transpose();
  for (int i = 0; i < n; ++i) {
    Matrix<T> lhs(n, n);
    for (int j = 0; j < n; ++j)
      if (!(A(i, j) == T(0))) lhs += A(i, j) * N[static_cast<size_t>(j)];
    if (!(lhs == At * M[static_cast<size_t>(i)] * A)) return false;
  }
  return true;
}

bool check_witness(const MatrixTuple& m, const MatrixTuple& t, const WitnessMatrix& a);
// same check with entries in a quadratic extension (square-root witnesses)
bool check_witness(const MatrixTuple& m, const MatrixTuple& t, const SurdMatrix& a);

std::size_t stacked_rank(const MatrixTuple& t);
bool is_symmetric_tuple(const MatrixTuple& t);
bool is_automorphism(const MatrixTuple& t, const WitnessMatrix& a);

// the tuple N with check_witness(m, N, a): N^i = sum_j b_ij A^T M^j A, B = A^{-1}
MatrixTuple transport(const MatrixTuple& m, const WitnessMatrix& a);

}  // namespace dgfree
