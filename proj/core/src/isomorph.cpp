#include "dgfree/isomorph.hpp"

#include "dgfree/errors.hpp"
#include "dgfree/linalg.hpp"

namespace dgfree {

WitnessMatrix::WitnessMatrix(RatMatrix a) : a_(std::move(a)) {
  if (!a_.square() || a_.rows() < 1) throw DimensionMismatch("witness must be square");
  if (bareiss_determinant(a_).is_zero()) throw DomainError("witness matrix is singular");
}

WitnessMatrix WitnessMatrix::inverse() const { return WitnessMatrix(*a_.inverse()); }

SurdMatrix to_surd(const RatMatrix& m) {
  SurdMatrix s(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s(i, j) = Surd(m(i, j));
  return s;
}

std::optional<RatMatrix> to_rational(const SurdMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_rational()) return std::nullopt;
      r(i, j) = m(i, j).a();
    }
  return r;
}

namespace {

void require_pair(const MatrixTuple& m, const MatrixTuple& t, int an) {
  if (m.n() != t.n() || m.n() != an) throw DimensionMismatch("witness and tuples differ in n");
  if (!is_crisscross(m) || !is_crisscross(t)) throw NotCrisscross();
}

}  // namespace

bool check_witness(const MatrixTuple& m, const MatrixTuple& t, const WitnessMatrix& a) {
  require_pair(m, t, a.n());
  return witness_equations_hold(m.matrices(), t.matrices(), a.entries());
}

bool check_witness(const MatrixTuple& m, const MatrixTuple& t, const SurdMatrix& a) {
  if (!a.square()) throw DimensionMismatch("witness must be square");
  require_pair(m, t, a.rows());
  if (a.determinant() == Surd(0)) throw DomainError("witness matrix is singular");
  std::vector<SurdMatrix> M, N;
  for (const auto& x : m.matrices()) M.push_back(to_surd(x));
  for (const auto& x : t.matrices()) N.push_back(to_surd(x));
  return witness_equations_hold(M, N, a);
}

std::size_t stacked_rank(const MatrixTuple& t) {
  const int n = t.n();
  RatMatrix s(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) s(i * n + j, k) = t.matrices()[static_cast<size_t>(i)](j, k);
  return bareiss_rank(s);
}

bool is_symmetric_tuple(const MatrixTuple& t) {
  for (const auto& m : t.matrices())
    if (!(m == m.transpose())) return false;
  return true;
}

bool is_automorphism(const MatrixTuple& t, const WitnessMatrix& a) { return check_witness(t, t, a); }

MatrixTuple transport(const MatrixTuple& m, const WitnessMatrix& a) {
  const int n = m.n();
  if (a.n() != n) throw DimensionMismatch("witness and tuple differ in n");
  RatMatrix B = a.inverse().entries();
  const RatMatrix& A = a.entries();
  RatMatrix At = A.transpose();
  std::vector<RatMatrix> conj;
  for (const auto& M : m.matrices()) conj.push_back(At * M * A);
  std::vector<RatMatrix> N(static_cast<size_t>(n), RatMatrix(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!B(i, j).is_zero()) N[static_cast<size_t>(i)] += B(i, j) * conj[static_cast<size_t>(j)];
  return MatrixTuple(std::move(N));
}

}  // namespace dgfree
