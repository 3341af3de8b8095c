#include "dgfree/cohomology.hpp"

#include <map>

#include "dgfree/errors.hpp"

namespace dgfree {

namespace {

void require_crisscross(const MatrixTuple& t) {
  if (!is_crisscross(t)) throw NotCrisscross();
}

SparseMatrix build_matrix(const MatrixTuple& t, int d) {
  const std::size_t n = static_cast<std::size_t>(t.n());
  const std::size_t cols = ipow(n, d), rows = cols * n;
  SparseMatrix m(rows, cols);
  // nonzero quadratic coefficients per generator: (j*n + k, value)
  std::vector<std::vector<std::pair<std::size_t, Rational>>> quad(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& v = t.matrices()[i](static_cast<int>(j), static_cast<int>(k));
        if (!v.is_zero()) quad[i].emplace_back(j * n + k, v);
      }
  std::vector<std::size_t> letters(static_cast<size_t>(d));
  for (std::size_t w = 0; w < cols; ++w) {
    std::size_t x = w;
    for (int p = d - 1; p >= 0; --p) {
      letters[static_cast<size_t>(p)] = x % n;
      x /= n;
    }
    std::map<std::size_t, Rational> acc;
    std::size_t prefix = 0;
    for (int p = 0; p < d; ++p) {
      // suffix = index of letters p+1..d-1, width d-p-1
      std::size_t sw = ipow(n, d - p - 1);
      std::size_t suffix = w % sw;
      std::size_t base = prefix * n * n * sw + suffix;
      bool neg = p % 2 == 1;
      for (const auto& [jk, v] : quad[letters[static_cast<size_t>(p)]]) {
        auto& slot = acc[base + jk * sw];
        if (neg)
          slot -= v;
        else
          slot += v;
      }
      prefix = prefix * n + letters[static_cast<size_t>(p)];
    }
    auto& col = m.columns[w];
    for (auto& [r, v] : acc)
      if (!v.is_zero()) col.emplace_back(static_cast<std::uint32_t>(r), std::move(v));
  }
  return m;
}

std::size_t rank_of(const MatrixTuple& t, int d) {
  if (d < 0) return 0;
  return rank(build_matrix(t, d));
}

int degree_of_pair(const Element& a, const Element& b) {
  auto da = a.degree(), db = b.degree();
  if ((!a.is_zero() && !da) || (!b.is_zero() && !db)) throw DegreeMismatch("class_equal needs homogeneous input");
  if (da && db && *da != *db) throw DegreeMismatch("class_equal needs elements of one degree");
  return da ? *da : (db ? *db : 0);
}

void require_cocycle(const MatrixTuple& t, const Element& z) {
  if (!differential(t, z).is_zero()) throw DomainError("not a cocycle: " + z.str());
}

std::vector<SparseVec> image_generators(const MatrixTuple& t, int d) {
  if (d <= 0) return {};
  return build_matrix(t, d - 1).columns;
}

}  // namespace

DifferentialMatrix differential_matrix(const MatrixTuple& t, int d) {
  require_crisscross(t);
  if (d < 0) throw DomainError("degree must be >= 0");
  return DifferentialMatrix{t.n(), d, build_matrix(t, d)};
}

SparseVec coordinates(const Element& e, int d) {
  SparseVec v;
  for (const auto& [w, c] : e.terms()) {
    if (w.degree() != d) throw DegreeMismatch("element is not homogeneous of degree " + std::to_string(d));
    v.emplace_back(static_cast<std::uint32_t>(word_index(e.n(), w)), c);
  }
  // map order within one degree is lexicographic, which is index order
  return v;
}

Element from_coordinates(int n, int d, const SparseVec& v) {
  Element e(n);
  for (const auto& [i, c] : v) e.add_term(word_at(n, d, i), c);
  return e;
}

std::size_t cohomology_dim(const MatrixTuple& t, int d) {
  require_crisscross(t);
  if (d < 0) throw DomainError("degree must be >= 0");
  return ipow(static_cast<std::size_t>(t.n()), d) - rank_of(t, d) - rank_of(t, d - 1);
}

namespace {

std::vector<SparseVec> representatives(std::size_t dim, const std::vector<SparseVec>& image,
                                       const std::vector<SparseVec>& kernel) {
  EchelonBasis b(dim);
  for (const auto& c : image) b.insert(c);
  std::vector<SparseVec> reps;
  for (const auto& k : kernel) {
    SparseVec r = b.reduce(k);
    if (r.empty()) continue;
    Rational lead = r.front().second.inverse();
    for (auto& e : r) e.second *= lead;
    reps.push_back(r);
    b.insert_reduced(std::move(r));
  }
  return reps;
}

}  // namespace

std::vector<Element> cohomology_basis(const MatrixTuple& t, int d) {
  require_crisscross(t);
  if (d < 0) throw DomainError("degree must be >= 0");
  const std::size_t dim = ipow(static_cast<std::size_t>(t.n()), d);
  auto ker = kernel_basis(build_matrix(t, d));
  std::vector<Element> out;
  for (const auto& r : representatives(dim, image_generators(t, d), ker.kernel))
    out.push_back(from_coordinates(t.n(), d, r));
  return out;
}

std::optional<Element> coboundary_preimage(const MatrixTuple& t, const Element& z) {
  require_crisscross(t);
  int d = degree_of_pair(z, z);
  if (z.is_zero()) return Element(t.n());
  if (d == 0) return std::nullopt;
  auto gens = image_generators(t, d);
  auto sol = solve_combination(gens, coordinates(z, d), ipow(static_cast<std::size_t>(t.n()), d));
  if (!sol) return std::nullopt;
  SparseVec y;
  for (std::size_t i = 0; i < sol->size(); ++i)
    if (!(*sol)[i].is_zero()) y.emplace_back(static_cast<std::uint32_t>(i), (*sol)[i]);
  return from_coordinates(t.n(), d - 1, y);
}

bool class_equal(const MatrixTuple& t, const Element& z1, const Element& z2) {
  require_crisscross(t);
  degree_of_pair(z1, z2);
  require_cocycle(t, z1);
  require_cocycle(t, z2);
  return coboundary_preimage(t, z1 - z2).has_value();
}

std::vector<Rational> class_coordinates(const MatrixTuple& t, const Element& z) {
  require_crisscross(t);
  require_cocycle(t, z);
  int d = degree_of_pair(z, z);
  auto reps = cohomology_basis(t, d);
  if (z.is_zero()) return std::vector<Rational>(reps.size());
  std::vector<SparseVec> gens;
  for (const auto& r : reps) gens.push_back(coordinates(r, d));
  for (auto& c : image_generators(t, d)) gens.push_back(std::move(c));
  auto sol = solve_combination(gens, coordinates(z, d), ipow(static_cast<std::size_t>(t.n()), d));
  if (!sol) throw std::logic_error("class_coordinates: cocycle outside span of basis and coboundaries");
  return std::vector<Rational>(sol->begin(), sol->begin() + static_cast<long>(reps.size()));
}

std::vector<std::size_t> CohomologyReport::dims() const {
  std::vector<std::size_t> out;
  for (const auto& r : degrees) out.push_back(r.dim_H);
  return out;
}

CohomologyReport cohomology_table(const MatrixTuple& t, int max_degree, bool with_representatives) {
  require_crisscross(t);
  if (max_degree < 0) throw DomainError("max degree must be >= 0");
  CohomologyReport rep;
  rep.n = t.n();
  SparseMatrix prev;  // d^{d-1}
  std::size_t prev_rank = 0;
  for (int d = 0; d <= max_degree; ++d) {
    SparseMatrix cur = build_matrix(t, d);
    DegreeRecord r;
    r.degree = d;
    r.dim_component = cur.cols;
    if (with_representatives) {
      auto ker = kernel_basis(cur);
      r.rank_d = ker.rank;
      r.dim_ker = ker.kernel.size();
      for (const auto& v : representatives(cur.cols, d > 0 ? prev.columns : std::vector<SparseVec>{}, ker.kernel))
        r.representatives.push_back(from_coordinates(t.n(), d, v));
    } else {
      r.rank_d = rank(cur);
      r.dim_ker = cur.cols - r.rank_d;
    }
    r.dim_H = r.dim_ker - prev_rank;
    prev_rank = r.rank_d;
    prev = std::move(cur);
    rep.degrees.push_back(std::move(r));
  }
  return rep;
}

}  // namespace dgfree
