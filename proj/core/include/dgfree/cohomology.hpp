#pragma once

#include <vector>

#include "dgfree/dgcore.hpp"
#include "dgfree/linalg.hpp"

namespace dgfree {

// Coordinates of d restricted to A^d -> A^{d+1}; rows and columns follow basis_words order.
struct DifferentialMatrix {
  int n = 0;
  int source_degree = 0;
  SparseMatrix matrix;  // n^{d+1} x n^d
  RatMatrix dense() const { return matrix.to_dense(); }
};

DifferentialMatrix differential_matrix(const MatrixTuple& t, int d);

SparseVec coordinates(const Element& homogeneous, int d);
Element from_coordinates(int n, int d, const SparseVec& v);

std::size_t cohomology_dim(const MatrixTuple& t, int d);
std::vector<Element> cohomology_basis(const MatrixTuple& t, int d);
bool class_equal(const MatrixTuple& t, const Element& z1, const Element& z2);
// some y with d(y) = z, when z is a coboundary
std::optional<Element> coboundary_preimage(const MatrixTuple& t, const Element& z);
// coordinates of the class of a cocycle z against cohomology_basis(t, deg z)
std::vector<Rational> class_coordinates(const MatrixTuple& t, const Element& z);

struct DegreeRecord {
  int degree = 0;
  std::size_t dim_component = 0, rank_d = 0, dim_ker = 0, dim_H = 0;
  std::vector<Element> representatives;
};

struct CohomologyReport {
  int n = 0;
  std::vector<DegreeRecord> degrees;
  std::vector<std::size_t> dims() const;
};

CohomologyReport cohomology_table(const MatrixTuple& t, int max_degree, bool with_representatives = true);

}  // namespace dgfree
