#include "dgfree/linalg.hpp"

#include <algorithm>

namespace dgfree {

RatMatrix SparseMatrix::to_dense() const {
  RatMatrix d(static_cast<int>(rows), static_cast<int>(cols));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, v] : columns[j]) d(static_cast<int>(i), static_cast<int>(j)) = v;
  return d;
}

SparseMatrix SparseMatrix::from_dense(const RatMatrix& m) {
  SparseMatrix s(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) s.columns[static_cast<size_t>(j)].emplace_back(i, m(i, j));
  return s;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const SparseVec& c) { return c.empty(); });
}

SparseVec sparse_axpy(const SparseVec& x, const Rational& c, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, c * y[j].second);
      ++j;
    } else {
      Rational v = x[i].second + c * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const SparseVec& x, const Rational& c) {
  if (c.is_zero()) return {};
  SparseVec out(x);
  for (auto& e : out) e.second *= c;
  return out;
}

SparseVec apply(const SparseMatrix& m, const SparseVec& v) {
  SparseVec acc;
  for (const auto& [j, c] : v) acc = sparse_axpy(acc, c, m.columns.at(j));
  return acc;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw DimensionMismatch("sparse product shape mismatch");
  SparseMatrix p(a.rows, b.cols);
  for (std::size_t j = 0; j < b.cols; ++j) p.columns[j] = apply(a, b.columns[j]);
  return p;
}

EchelonBasis::EchelonBasis(std::size_t dim, std::size_t pivot_limit)
    : dim_(dim), limit_(std::min(dim, pivot_limit)) {}

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
  if (rows_.empty()) return v;
  // dense accumulator over the pivot range, sparse tail above it
  std::vector<Rational> acc(limit_);
  std::vector<char> touched(limit_, 0);
  SparseVec tail;
  for (const auto& [i, c] : v) {
    if (i < limit_) {
      acc[i] = c;
      touched[i] = 1;
    } else {
      tail.emplace_back(i, c);
    }
  }
  for (std::size_t col = 0; col < limit_; ++col) {
    if (!touched[col] || acc[col].is_zero() || !is_pivot(col)) continue;
    Rational f = -acc[col];
    const SparseVec& row = rows_[static_cast<size_t>(pivot_row_[col])];
    SparseVec row_tail;
    for (const auto& [i, c] : row) {
      if (i < limit_) {
        acc[i] += f * c;
        touched[i] = 1;
      } else {
        row_tail.emplace_back(i, c);
      }
    }
    if (!row_tail.empty()) tail = sparse_axpy(tail, f, row_tail);
  }
  SparseVec out;
  for (std::size_t i = 0; i < limit_; ++i)
    if (touched[i] && !acc[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), acc[i]);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

void EchelonBasis::insert_reduced(SparseVec r) {
  if (r.empty() || r.front().first >= limit_) throw DomainError("insert_reduced: no pivot");
  Rational inv = r.front().second.inverse();
  for (auto& e : r) e.second *= inv;
  std::size_t col = r.front().first;
  if (pivot_row_.size() <= col) pivot_row_.resize(limit_, -1);
  pivot_row_[col] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
}

bool EchelonBasis::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty() || r.front().first >= limit_) return false;
  insert_reduced(std::move(r));
  return true;
}

std::size_t rank(const SparseMatrix& m) {
  EchelonBasis b(m.rows);
  for (const auto& c : m.columns) b.insert(c);
  return b.rank();
}

KernelResult kernel_basis(const SparseMatrix& m) {
  const std::size_t R = m.rows;
  EchelonBasis b(R + m.cols, R);
  KernelResult out;
  for (std::size_t j = 0; j < m.cols; ++j) {
    SparseVec v = m.columns[j];
    v.emplace_back(static_cast<std::uint32_t>(R + j), Rational(1));
    SparseVec r = b.reduce(v);
    if (r.empty() || r.front().first >= R) {
      SparseVec k;
      k.reserve(r.size());
      for (const auto& [i, c] : r) k.emplace_back(static_cast<std::uint32_t>(i - R), c);
      out.kernel.push_back(std::move(k));
    } else {
      b.insert_reduced(std::move(r));
    }
  }
  out.rank = b.rank();
  return out;
}

std::optional<std::vector<Rational>> solve_combination(const std::vector<SparseVec>& gens,
                                                       const SparseVec& target, std::size_t dim) {
  EchelonBasis b(dim + gens.size(), dim);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    SparseVec v = gens[g];
    v.emplace_back(static_cast<std::uint32_t>(dim + g), Rational(1));
    SparseVec r = b.reduce(v);
    if (!r.empty() && r.front().first < dim) b.insert_reduced(std::move(r));
  }
  SparseVec r = b.reduce(target);
  if (!r.empty() && r.front().first < dim) return std::nullopt;
  // r = target - sum c_k row_k, tracker part of r is -(combination)
  std::vector<Rational> coeffs(gens.size());
  for (const auto& [i, c] : r) coeffs[i - dim] = -c;
  return coeffs;
}

namespace {

std::vector<std::vector<Integer>> clear_denominators(const RatMatrix& m) {
  std::vector<std::vector<Integer>> a(static_cast<size_t>(m.rows()),
                                      std::vector<Integer>(static_cast<size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    for (int j = 0; j < m.cols(); ++j)
      a[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
  }
  return a;
}

// returns rank; det_sign_out receives the final pivot (determinant for square full rank)
std::size_t bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols, Integer* last_pivot,
                    int* swaps) {
  std::size_t rows = a.size(), r = 0;
  Integer prev = 1;
  *swaps = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      ++*swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (last_pivot) *last_pivot = prev;
  return r;
}

}  // namespace

std::size_t bareiss_rank(const RatMatrix& m) {
  auto a = clear_denominators(m);
  int swaps = 0;
  return bareiss(a, static_cast<size_t>(m.cols()), nullptr, &swaps);
}

Rational bareiss_determinant(const RatMatrix& m) {
  if (!m.square()) throw DimensionMismatch("determinant of non-square matrix");
  if (m.rows() == 0) return Rational(1);
  Integer scale = 1;
  for (int i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    scale *= l;
  }
  auto a = clear_denominators(m);
  Integer last;
  int swaps = 0;
  std::size_t r = bareiss(a, static_cast<size_t>(m.cols()), &last, &swaps);
  if (r < static_cast<size_t>(m.rows())) return Rational(0);
  Rational det(last, scale);
  return swaps % 2 ? -det : det;
}

}  // namespace dgfree
