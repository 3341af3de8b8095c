#include "dgfree/dgmodule.hpp"

#include <map>

#include "dgfree/cohomology.hpp"
#include "dgfree/errors.hpp"

namespace dgfree {

bool FreeDGModule::degree_zero_basis() const {
  for (const auto& b : basis_)
    if (b.degree != 0) return false;
  return true;
}

ModuleElement module_differential(const FreeDGModule& f, const ModuleElement& x) {
  const int r = f.rank();
  if (static_cast<int>(x.size()) != r) throw DimensionMismatch("module element has wrong length");
  const MatrixTuple& t = f.algebra().tuple();
  ModuleElement out(static_cast<size_t>(r), Element(f.n()));
  for (int j = 0; j < r; ++j) {
    const Element& a = x[static_cast<size_t>(j)];
    if (a.is_zero()) continue;
    out[static_cast<size_t>(j)] += differential(t, a);
    for (int h = 0; h <= a.max_degree(); ++h) {
      Element ah = a.homogeneous_component(h);
      if (ah.is_zero()) continue;
      if (h % 2) ah = -ah;
      for (int k = 0; k < r; ++k) {
        const Element& D = f.diff()[static_cast<size_t>(j)][static_cast<size_t>(k)];
        if (!D.is_zero()) out[static_cast<size_t>(k)] += ah * D;
      }
    }
  }
  return out;
}

FreeDGModule make_module(DGFreeAlgebra alg, std::vector<ModuleBasisElement> basis,
                         std::vector<std::vector<Element>> diff) {
  const std::size_t r = basis.size();
  if (r == 0) throw DimensionMismatch("module needs a nonempty basis");
  if (diff.size() != r) throw DimensionMismatch("differential matrix must be square of the basis size");
  for (std::size_t j = 0; j < r; ++j) {
    if (diff[j].size() != r) throw DimensionMismatch("differential matrix must be square of the basis size");
    for (std::size_t k = 0; k < r; ++k) {
      const Element& e = diff[j][k];
      if (e.n() != alg.n()) throw DimensionMismatch("differential entry over a different generator count");
      if (e.is_zero()) continue;
      int want = basis[j].degree + 1 - basis[k].degree;
      auto deg = e.degree();
      if (!deg || *deg != want)
        throw DegreeMismatch("entry D[" + std::to_string(j) + "][" + std::to_string(k) + "] = " + e.str() +
                             " must be homogeneous of degree " + std::to_string(want));
    }
  }
  FreeDGModule f(std::move(alg), std::move(basis), std::move(diff));
  for (std::size_t j = 0; j < r; ++j) {
    ModuleElement ej(r, Element(f.n()));
    ej[j] = Element::one(f.n());
    auto dd = module_differential(f, module_differential(f, ej));
    for (std::size_t k = 0; k < r; ++k)
      if (!dd[k].is_zero())
        throw DomainError("d^2 != 0 on basis element " + f.basis()[j].name + ": coefficient of " +
                          f.basis()[k].name + " is " + dd[k].str());
  }
  return f;
}

namespace {

// offsets of the blocks A^{d - deg e_j} inside F^d
std::vector<std::pair<int, std::size_t>> blocks(const FreeDGModule& f, int d, std::size_t* total) {
  std::vector<std::pair<int, std::size_t>> out;  // (word degree or -1, offset)
  std::size_t off = 0;
  for (const auto& b : f.basis()) {
    int wd = d - b.degree;
    out.emplace_back(wd, off);
    if (wd >= 0) off += ipow(static_cast<std::size_t>(f.n()), wd);
  }
  *total = off;
  return out;
}

void require_degree_zero(const FreeDGModule& f, const char* what) {
  if (!f.degree_zero_basis()) throw Unsupported(std::string(what) + " supports degree-0 bases only");
}

}  // namespace

std::size_t module_piece_dim(const FreeDGModule& f, int d) {
  std::size_t total = 0;
  blocks(f, d, &total);
  return total;
}

SparseMatrix module_differential_matrix(const FreeDGModule& f, int d) {
  std::size_t src = 0, dst = 0;
  auto sb = blocks(f, d, &src);
  auto tb = blocks(f, d + 1, &dst);
  SparseMatrix m(dst, src);
  const int r = f.rank();
  for (int j = 0; j < r; ++j) {
    int wd = sb[static_cast<size_t>(j)].first;
    if (wd < 0) continue;
    std::size_t count = ipow(static_cast<std::size_t>(f.n()), wd);
    for (std::size_t w = 0; w < count; ++w) {
      ModuleElement x(static_cast<size_t>(r), Element(f.n()));
      x[static_cast<size_t>(j)] = Element(f.n(), word_at(f.n(), wd, w));
      auto y = module_differential(f, x);
      SparseVec col;
      for (int k = 0; k < r; ++k) {
        const Element& yk = y[static_cast<size_t>(k)];
        if (yk.is_zero()) continue;
        auto [tw, toff] = tb[static_cast<size_t>(k)];
        for (const auto& [i, c] : coordinates(yk, tw))
          col.emplace_back(static_cast<std::uint32_t>(toff + i), c);
      }
      m.columns[sb[static_cast<size_t>(j)].second + w] = std::move(col);
    }
  }
  return m;
}

std::size_t module_cohomology_dim(const FreeDGModule& f, int d) {
  std::size_t dim = module_piece_dim(f, d);
  std::size_t r_out = dim ? rank(module_differential_matrix(f, d)) : 0;
  std::size_t r_in = module_piece_dim(f, d - 1) ? rank(module_differential_matrix(f, d - 1)) : 0;
  return dim - r_out - r_in;
}

SparseMatrix hom_differential_matrix(const FreeDGModule& f, int d) {
  require_degree_zero(f, "hom_into_algebra_cohomology");
  const int r = f.rank(), n = f.n();
  const std::size_t src_block = ipow(static_cast<std::size_t>(n), d);
  const std::size_t dst_block = src_block * static_cast<std::size_t>(n);
  SparseMatrix m(dst_block * static_cast<size_t>(r), src_block * static_cast<size_t>(r));
  const MatrixTuple& t = f.algebra().tuple();
  for (int i = 0; i < r; ++i)
    for (std::size_t w = 0; w < src_block; ++w) {
      Element g(n, word_at(n, d, w));
      std::map<std::uint32_t, Rational> acc;
      auto put = [&](int block, const Element& e) {
        for (const auto& [idx, c] : coordinates(e, d + 1)) {
          auto& s = acc[static_cast<std::uint32_t>(block * dst_block + idx)];
          s += c;
        }
      };
      put(i, differential(t, g));
      for (int row = 0; row < r; ++row) {
        const Element& D = f.diff()[static_cast<size_t>(row)][static_cast<size_t>(i)];
        if (!D.is_zero()) put(row, -(D * g));
      }
      SparseVec col;
      for (auto& [idx, c] : acc)
        if (!c.is_zero()) col.emplace_back(idx, std::move(c));
      m.columns[static_cast<size_t>(i) * src_block + w] = std::move(col);
    }
  return m;
}

std::size_t hom_into_algebra_cohomology(const FreeDGModule& f, int d) {
  require_degree_zero(f, "hom_into_algebra_cohomology");
  if (d < 0) return 0;
  SparseMatrix out = hom_differential_matrix(f, d);
  std::size_t r_in = d > 0 ? rank(hom_differential_matrix(f, d - 1)) : 0;
  return out.cols - rank(out) - r_in;
}

// ---- endomorphisms

namespace {

SparseVec flatten(const RatMatrix& m) {
  SparseVec v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) v.emplace_back(static_cast<std::uint32_t>(i * m.cols() + j), m(i, j));
  return v;
}

RatMatrix unflatten(const SparseVec& v, int r) {
  RatMatrix m(r, r);
  for (const auto& [i, c] : v) m(static_cast<int>(i) / r, static_cast<int>(i) % r) = c;
  return m;
}

RatMatrix combine(const std::vector<RatMatrix>& basis, const std::vector<Rational>& c, int r) {
  RatMatrix m(r, r);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!c[i].is_zero()) m += c[i] * basis[i];
  return m;
}

std::optional<std::vector<Rational>> coords_in(const std::vector<RatMatrix>& basis, const RatMatrix& x) {
  std::vector<SparseVec> gens;
  for (const auto& b : basis) gens.push_back(flatten(b));
  std::size_t dim = static_cast<std::size_t>(x.rows() * x.cols());
  return solve_combination(gens, flatten(x), dim);
}

// span of all products a*b, a in A, b in B; returned as a basis list
std::vector<RatMatrix> product_span(const std::vector<RatMatrix>& A, const std::vector<RatMatrix>& B, int r) {
  EchelonBasis eb(static_cast<std::size_t>(r * r));
  for (const auto& a : A)
    for (const auto& b : B) eb.insert(flatten(a * b));
  std::vector<RatMatrix> out;
  for (const auto& row : eb.rows()) out.push_back(unflatten(row, r));
  return out;
}

}  // namespace

EndoAlgebraReport degree_zero_endo_algebra(const FreeDGModule& f) {
  require_degree_zero(f, "degree_zero_endo_algebra");
  const int r = f.rank();
  // unknown a_pq at column p*r+q; equations (A D - D A)_{jl}[w] = 0
  std::map<std::tuple<int, int, Word>, std::uint32_t> row_of;
  std::vector<std::map<std::uint32_t, Rational>> cols(static_cast<size_t>(r * r));
  auto add = [&](int j, int l, const Word& w, int unknown, const Rational& c) {
    auto key = std::make_tuple(j, l, w);
    auto it = row_of.find(key);
    if (it == row_of.end()) it = row_of.emplace(key, static_cast<std::uint32_t>(row_of.size())).first;
    cols[static_cast<size_t>(unknown)][it->second] += c;
  };
  const auto& D = f.diff();
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q) {
      int u = p * r + q;
      for (int l = 0; l < r; ++l)  // (A D)_{p l} gets a_pq D_ql
        for (const auto& [w, c] : D[static_cast<size_t>(q)][static_cast<size_t>(l)].terms()) add(p, l, w, u, c);
      for (int j = 0; j < r; ++j)  // (D A)_{j q} gets D_jp a_pq
        for (const auto& [w, c] : D[static_cast<size_t>(j)][static_cast<size_t>(p)].terms()) add(j, q, w, u, -c);
    }
  SparseMatrix sys(row_of.size(), static_cast<size_t>(r * r));
  for (std::size_t u = 0; u < cols.size(); ++u)
    for (auto& [row, c] : cols[u])
      if (!c.is_zero()) sys.columns[u].emplace_back(row, c);

  EndoAlgebraReport rep;
  std::vector<RatMatrix> basis;
  for (const auto& k : kernel_basis(sys).kernel) basis.push_back(unflatten(k, r));
  rep.dimension = basis.size();
  rep.contains_identity = coords_in(basis, RatMatrix::identity(r)).has_value();
  rep.closed = true;
  rep.commutative = true;
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (!coords_in(basis, a * b)) rep.closed = false;
      if (!(a * b == b * a)) rep.commutative = false;
    }

  if (rep.closed && rep.commutative && rep.contains_identity && !basis.empty()) {
    const std::size_t dim = basis.size();
    // trace form G_ij = tr(L_{b_i} L_{b_j}); its radical is the nilradical in characteristic 0
    std::vector<RatMatrix> L;
    for (const auto& a : basis) {
      RatMatrix m(static_cast<int>(dim), static_cast<int>(dim));
      for (std::size_t j = 0; j < dim; ++j) {
        auto c = *coords_in(basis, a * basis[j]);
        for (std::size_t i = 0; i < dim; ++i) m(static_cast<int>(i), static_cast<int>(j)) = c[i];
      }
      L.push_back(m);
    }
    RatMatrix G(static_cast<int>(dim), static_cast<int>(dim));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        RatMatrix p = L[i] * L[j];
        Rational tr;
        for (int k = 0; k < p.rows(); ++k) tr += p(k, k);
        G(static_cast<int>(i), static_cast<int>(j)) = tr;
      }
    std::vector<RatMatrix> N;
    for (const auto& k : kernel_basis(SparseMatrix::from_dense(G)).kernel) {
      std::vector<Rational> c(dim);
      for (const auto& [i, v] : k) c[i] = v;
      N.push_back(combine(basis, c, r));
    }
    rep.radical_dimension = N.size();
    rep.local = N.size() + 1 == dim;

    std::vector<RatMatrix> power = N;
    int k = 1;
    while (!power.empty() && k <= static_cast<int>(dim) + 1) {
      power = product_span(power, N, r);
      ++k;
    }
    if (power.empty()) rep.radical_nilpotency = k;
    if (N.empty()) rep.radical_nilpotency = 1;

    auto N2 = product_span(N, N, r);
    if (*rep.local && N.size() == N2.size() + 1) {
      EchelonBasis eb(static_cast<std::size_t>(r * r));
      for (const auto& m : N2) eb.insert(flatten(m));
      for (const auto& m : N) {
        SparseVec red = eb.reduce(flatten(m));
        if (red.empty()) continue;
        Rational s = red.front().second.inverse();
        RatMatrix X = unflatten(sparse_scale(red, s), r);
        rep.generator = X;
        RatMatrix P = X;
        int e = 1;
        while (!P.is_zero() && e <= static_cast<int>(dim) + 1) {
          P = P * X;
          ++e;
        }
        if (P.is_zero()) rep.generator_nilpotency = e;
        break;
      }
    }
    if (rep.generator && rep.generator_nilpotency && static_cast<std::size_t>(*rep.generator_nilpotency) == dim) {
      std::vector<RatMatrix> pb{RatMatrix::identity(r)};
      for (std::size_t i = 1; i < dim; ++i) pb.push_back(pb.back() * *rep.generator);
      basis = pb;
      rep.power_basis = true;
    }
  }

  rep.basis = basis;
  if (rep.closed) {
    rep.table.assign(basis.size(), std::vector<std::vector<Rational>>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) rep.table[i][j] = *coords_in(basis, basis[i] * basis[j]);
  }
  return rep;
}

}  // namespace dgfree
