#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgfree/dgcore.hpp"
#include "dgfree/linalg.hpp"

namespace dgfree {

struct ModuleBasisElement {
  std::string name;
  int degree = 0;
};

// element sum_j a_j e_j, stored as the coefficient list (a_1, ..., a_r)
using ModuleElement = std::vector<Element>;

class FreeDGModule {
 public:
  const DGFreeAlgebra& algebra() const { return alg_; }
  const std::vector<ModuleBasisElement>& basis() const { return basis_; }
  // diff()[j][k] = coefficient of e_k in d(e_j)
  const std::vector<std::vector<Element>>& diff() const { return D_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  int n() const { return alg_.n(); }
  bool degree_zero_basis() const;

 private:
  friend FreeDGModule make_module(DGFreeAlgebra, std::vector<ModuleBasisElement>,
                                  std::vector<std::vector<Element>>);
  FreeDGModule(DGFreeAlgebra a, std::vector<ModuleBasisElement> b, std::vector<std::vector<Element>> d)
      : alg_(std::move(a)), basis_(std::move(b)), D_(std::move(d)) {}

  DGFreeAlgebra alg_;
  std::vector<ModuleBasisElement> basis_;
  std::vector<std::vector<Element>> D_;
};

// throws DegreeMismatch / DimensionMismatch / DomainError("d^2 != 0 ...")
FreeDGModule make_module(DGFreeAlgebra alg, std::vector<ModuleBasisElement> basis,
                         std::vector<std::vector<Element>> diff);

// d(a e) = d(a) e + (-1)^{|a|} a d(e)
ModuleElement module_differential(const FreeDGModule& f, const ModuleElement& x);

// F^d -> F^{d+1}, F^d = sum_j A^{d - deg e_j}; blocks in basis order
SparseMatrix module_differential_matrix(const FreeDGModule& f, int d);
std::size_t module_piece_dim(const FreeDGModule& f, int d);
std::size_t module_cohomology_dim(const FreeDGModule& f, int d);

// Hom_A(F, A) for a degree-0 basis: g <-> (g(e_1), ..., g(e_r)),
// (dg)_i = d_A(g_i) - sum_k D_ik g_k
SparseMatrix hom_differential_matrix(const FreeDGModule& f, int d);
std::size_t hom_into_algebra_cohomology(const FreeDGModule& f, int d);

struct EndoAlgebraReport {
  std::size_t dimension = 0;
  std::vector<RatMatrix> basis;
  // table[i][j] = coordinates of basis[i] * basis[j]
  std::vector<std::vector<std::vector<Rational>>> table;
  bool contains_identity = false;
  bool closed = false;
  bool commutative = false;
  std::optional<bool> local;  // residue field k; only decided for commutative algebras
  std::size_t radical_dimension = 0;
  std::optional<int> radical_nilpotency;  // least k with N^k = 0
  std::optional<RatMatrix> generator;     // X with N = (X), when N/N^2 is one-dimensional
  std::optional<int> generator_nilpotency;
  bool power_basis = false;  // basis is I, X, X^2, ...
};

EndoAlgebraReport degree_zero_endo_algebra(const FreeDGModule& f);

}  // namespace dgfree
