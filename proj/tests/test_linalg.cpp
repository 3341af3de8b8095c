#include <doctest.h>

#include "dgfree/linalg.hpp"
#include "support/oracle.hpp"

using namespace dgfree;

namespace {

SparseVec column(const RatMatrix& m, int j) { return SparseMatrix::from_dense(m).columns[static_cast<size_t>(j)]; }

SparseVec dense_to_sparse(const std::vector<Rational>& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back({static_cast<std::uint32_t>(i), v[i]});
  return out;
}

}  // namespace

TEST_CASE("Bareiss on small fixed matrices") {
  CHECK(bareiss_rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(bareiss_rank(RatMatrix(3, 3)) == 0);
  CHECK(bareiss_determinant(RatMatrix{{2, 1}, {1, 1}}) == Rational(1));
  CHECK(bareiss_determinant(RatMatrix{{Rational(1, 2), 1}, {1, Rational(1, 3)}}) == Rational(-5, 6));
  CHECK(bareiss_determinant(RatMatrix{{0, 1}, {1, 0}}) == Rational(-1));
}

TEST_CASE("property: three rank routes agree") {
  oracle::Gen g(31);
  for (int iter = 0; iter < 300; ++iter) {
    int r = static_cast<int>(g.integer(1, 7)), c = static_cast<int>(g.integer(1, 7));
    auto m = g.matrix(r, c, 3, static_cast<int>(g.integer(0, 3)));
    // low-rank products now and then
    if (g.coin()) m = m * g.matrix(c, c, 2, 2);
    std::size_t ref = oracle::rank(oracle::dense(m));
    CHECK(bareiss_rank(m) == ref);
    CHECK(rank(SparseMatrix::from_dense(m)) == ref);
  }
}

TEST_CASE("property: determinant is multiplicative and matches inverse") {
  oracle::Gen g(32);
  for (int iter = 0; iter < 100; ++iter) {
    int n = static_cast<int>(g.integer(1, 5));
    auto a = g.matrix(n, n), b = g.matrix(n, n);
    CHECK(bareiss_determinant(a * b) == bareiss_determinant(a) * bareiss_determinant(b));
    CHECK(bareiss_determinant(a) == a.determinant());
    auto inv = a.inverse();
    CHECK(inv.has_value() == !bareiss_determinant(a).is_zero());
    if (inv) CHECK(a * *inv == RatMatrix::identity(n));
  }
}

TEST_CASE("property: kernel basis and rank-nullity") {
  oracle::Gen g(33);
  for (int iter = 0; iter < 200; ++iter) {
    int r = static_cast<int>(g.integer(1, 6)), c = static_cast<int>(g.integer(1, 8));
    auto m = g.matrix(r, c, 2, static_cast<int>(g.integer(0, 3)));
    auto sm = SparseMatrix::from_dense(m);
    auto k = kernel_basis(sm);
    CHECK(k.rank + k.kernel.size() == static_cast<std::size_t>(c));
    CHECK(k.rank == oracle::rank(oracle::dense(m)));
    for (const auto& v : k.kernel) CHECK(dgfree::apply(sm, v).empty());
    // independence of the kernel vectors
    EchelonBasis eb(static_cast<std::size_t>(c));
    for (const auto& v : k.kernel) CHECK(eb.insert(v));
  }
}

TEST_CASE("property: solve_combination finds exact coefficients") {
  oracle::Gen g(34);
  for (int iter = 0; iter < 150; ++iter) {
    int dim = static_cast<int>(g.integer(1, 6)), k = static_cast<int>(g.integer(1, 5));
    auto m = g.matrix(dim, k, 2, 2);
    std::vector<SparseVec> gens;
    for (int j = 0; j < k; ++j) gens.push_back(column(m, j));
    std::vector<Rational> coeff;
    for (int j = 0; j < k; ++j) coeff.push_back(g.rational());
    std::vector<Rational> target(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < k; ++j) target[static_cast<size_t>(i)] += coeff[static_cast<size_t>(j)] * m(i, j);
    auto sol = solve_combination(gens, dense_to_sparse(target), static_cast<std::size_t>(dim));
    REQUIRE(sol.has_value());
    std::vector<Rational> back(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < k; ++j) back[static_cast<size_t>(i)] += (*sol)[static_cast<size_t>(j)] * m(i, j);
    CHECK((back == target));
  }
  // outside the span
  SparseVec e0{{0u, Rational(1)}}, e1{{1u, Rational(1)}};
  CHECK_FALSE(solve_combination({e0}, e1, 2).has_value());
}

TEST_CASE("sparse matrix product matches dense product") {
  oracle::Gen g(35);
  for (int iter = 0; iter < 50; ++iter) {
    auto a = g.matrix(3, 4, 2, 2), b = g.matrix(4, 2, 2, 2);
    CHECK((SparseMatrix::from_dense(a) * SparseMatrix::from_dense(b)).to_dense() == a * b);
  }
}

TEST_CASE("echelon reduce is canonical modulo the span") {
  EchelonBasis eb(3);
  SparseVec v{{0u, Rational(2)}, {1u, Rational(2)}}, w{{0u, Rational(-1)}, {1u, Rational(-1)}};
  SparseVec p{{0u, Rational(1)}, {2u, Rational(1)}}, q{{1u, Rational(-1)}, {2u, Rational(1)}};
  CHECK(eb.insert(v));
  CHECK_FALSE(eb.insert(w));
  SparseVec a = eb.reduce(p);
  SparseVec b = eb.reduce(q);
  CHECK((a == b));
  CHECK(eb.rank() == 1);
}
