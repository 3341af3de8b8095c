#include <doctest.h>

#include <set>

#include "dgfree/classify2.hpp"
#include "dgfree/errors.hpp"
#include "support/oracle.hpp"

using namespace dgfree;

namespace {

MatrixTuple tup(std::initializer_list<RatMatrix> ms) { return MatrixTuple(std::vector<RatMatrix>(ms)); }

const std::vector<LabelKind> kAllKinds = {LabelKind::B0, LabelKind::B1, LabelKind::B2,  LabelKind::B3,
                                          LabelKind::B4, LabelKind::B5, LabelKind::B6,  LabelKind::B7,
                                          LabelKind::B8, LabelKind::B9, LabelKind::B10, LabelKind::B11};

// isomorphic finite labels: {B4, B9, B11}, {B3, B7, B10}, {B5, B8}; witnesses checked below
std::string merged(const ClassLabel& l) {
  switch (l.kind) {
    case LabelKind::B9:
    case LabelKind::B11: return "B4";
    case LabelKind::B7:
    case LabelKind::B10: return "B3";
    case LabelKind::B8: return "B5";
    default: return l.str();
  }
}

bool certified(const MatrixTuple& t, const Classification& c) {
  return check_witness(t, canonical_tuple(c.label), c.chain.composed());
}

// table targets: "B1", "B3/B4", "B5..B9", "B(s,t)", compared up to the merges
std::set<std::string> expand_target(const std::string& target) {
  std::set<std::string> out;
  if (auto dots = target.find(".."); dots != std::string::npos) {
    int lo = std::stoi(target.substr(1, dots - 1)), hi = std::stoi(target.substr(dots + 3));
    for (int k = lo; k <= hi; ++k) out.insert(merged(ClassLabel::parse("B" + std::to_string(k))));
    return out;
  }
  std::size_t start = 0;
  while (true) {
    auto p = target.find('/', start);
    std::string part = target.substr(start, p == std::string::npos ? std::string::npos : p - start);
    out.insert(part == "B(s,t)" ? part : merged(ClassLabel::parse(part)));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

CaseParams params(std::initializer_list<std::pair<const char*, Rational>> kv) {
  CaseParams p;
  for (const auto& [k, v] : kv) *p.slot(k) = v;
  return p;
}

}  // namespace

TEST_CASE("residuals of the n = 2 system") {
  auto bad = tup({RatMatrix{{0, 1}, {0, 0}}, RatMatrix{{0, 0}, {0, 0}}});
  auto res = crisscross_equations_n2(bad);
  REQUIRE(res.size() == 12);
  CHECK(std::string(kResidualNames[5]) == "2.2");
  CHECK(res[5] == Rational(1));
  for (const auto& r : crisscross_equations_n2(canonical_tuple(ClassLabel::of(LabelKind::B1)))) CHECK(r.is_zero());
  for (const auto& r : crisscross_equations_n2(MatrixTuple::zero(2))) CHECK(r.is_zero());
  CHECK_THROWS_AS(crisscross_equations_n2(MatrixTuple::zero(3)), DimensionMismatch);
}

TEST_CASE("property: residual system is equivalent to d^2 = 0 on generators") {
  oracle::Gen g(51);
  int hits = 0;
  for (int iter = 0; iter < 3000; ++iter) {
    auto t = g.coin() ? g.any_tuple(2, 1) : g.crisscross2();
    bool all_zero = true;
    for (const auto& r : crisscross_equations_n2(t)) all_zero = all_zero && r.is_zero();
    CHECK(all_zero == oracle::crisscross_by_d2(t));
    hits += all_zero;
  }
  CHECK(hits > 1000);
}

TEST_CASE("case instantiation") {
  CHECK(instantiate_case("1", params({{"mu", 1}, {"lambda", 0}})) ==
        tup({RatMatrix{{1, 0}, {0, 0}}, RatMatrix{{0, 1}, {1, 0}}}));
  CHECK(instantiate_case("13", params({{"lambda", 1}, {"mu", 1}, {"nu", 1}, {"omega", 0}})) ==
        tup({RatMatrix{{2, 1}, {1, 1}}, RatMatrix{{1, 1}, {1, 0}}}));
  CHECK(instantiate_case("14.3", params({{"lambda", 2}, {"mu", 3}})) ==
        tup({RatMatrix{{0, 3}, {3, 2}}, RatMatrix{{0, 0}, {0, 3}}}));
  CHECK_THROWS_AS(instantiate_case("99", CaseParams{}), DomainError);
  CHECK(case_families().size() == 27);
}

TEST_CASE("canonical tuples") {
  CHECK(canonical_tuple(ClassLabel::of(LabelKind::B1)) == tup({RatMatrix{{1, 0}, {0, 0}}, RatMatrix{{0, 0}, {1, 0}}}));
  CHECK(canonical_tuple(ClassLabel::of(LabelKind::B10)) ==
        tup({RatMatrix{{1, 0}, {0, Rational(-1, 4)}}, RatMatrix{{0, 1}, {1, 1}}}));
  CHECK(canonical_tuple(ClassLabel::bst(2, 3)) ==
        tup({RatMatrix{{-3, 1}, {1, Rational(1, 2)}}, RatMatrix{{2, 1}, {1, 3}}}));
  for (auto k : kAllKinds) CHECK(is_crisscross(canonical_tuple(ClassLabel::of(k))));
}

TEST_CASE("label text round trip") {
  for (auto k : kAllKinds) CHECK(ClassLabel::parse(ClassLabel::of(k).str()) == ClassLabel::of(k));
  auto l = ClassLabel::bst(-1, Rational(2, 3));
  CHECK(l.str() == "B(-1,2/3)");
  CHECK(ClassLabel::parse(l.str()) == l);
  CHECK_THROWS_AS(ClassLabel::parse("B12"), ParseError);
}

TEST_CASE("classification examples") {
  auto b7 = classify(tup({RatMatrix{{0, 1}, {1, 1}}, RatMatrix{{0, 0}, {0, 1}}}));
  CHECK(b7.label == ClassLabel::of(LabelKind::B7));
  CHECK(b7.chain.composed() == to_surd(RatMatrix::identity(2)));

  auto t143 = instantiate_case("14.3", params({{"lambda", 2}, {"mu", 3}}));
  auto c = classify(t143);
  CHECK(c.label == ClassLabel::of(LabelKind::B7));
  CHECK(certified(t143, c));
  CHECK(check_witness(t143, canonical_tuple(c.label),
                      WitnessMatrix(RatMatrix{{Rational(2, 9), 0}, {0, Rational(1, 3)}})));

  CHECK(classify(MatrixTuple::zero(2)).label == ClassLabel::of(LabelKind::B0));
  CHECK_THROWS_AS(classify(MatrixTuple::zero(3)), Unsupported);
  CHECK_THROWS_AS(classify(tup({RatMatrix{{0, 1}, {0, 0}}, RatMatrix(2, 2)})), NotCrisscross);
}

TEST_CASE("canonical forms classify to themselves") {
  for (auto k : kAllKinds) {
    auto l = ClassLabel::of(k);
    auto c = classify(canonical_tuple(l));
    CHECK_MESSAGE(c.label == l, l.str());
    auto tables = classify_by_tables(canonical_tuple(l));
    if (k == LabelKind::B9)
      CHECK(tables.label == ClassLabel::of(LabelKind::B4));
    else
      CHECK_MESSAGE(tables.label == l, l.str());
  }
  for (auto [s, t] : std::vector<std::pair<Rational, Rational>>{{1, 2}, {2, 3}, {-1, 2}, {Rational(1, 3), 0}}) {
    auto l = ClassLabel::bst(s, t);
    CHECK(classify(canonical_tuple(l)).label == l);
  }
}

TEST_CASE("B(s,1/s) is rewritten") {
  CHECK(classify(canonical_tuple(ClassLabel::bst(2, Rational(1, 2)))).label == ClassLabel::of(LabelKind::B8));
  CHECK(classify(canonical_tuple(ClassLabel::bst(-1, -1))).label == ClassLabel::of(LabelKind::B6));
  oracle::Gen g(52);
  for (int iter = 0; iter < 40; ++iter) {
    Rational s = g.nonzero_rational();
    auto t = transport(canonical_tuple(ClassLabel::bst(s, s.inverse())), WitnessMatrix(g.invertible(2)));
    auto c = classify(t);
    CHECK(c.label.kind != LabelKind::Bst);
    CHECK(certified(t, c));
  }
}

TEST_CASE("property: classification is invariant under change of generators") {
  // B(s,t) may land on a finite class or on other parameters depending on the input; the
  // witness is still certified, and the decision must never say no
  oracle::Gen g(53);
  for (int iter = 0; iter < 300; ++iter) {
    auto l = g.label();
    auto base = canonical_tuple(l);
    auto t = transport(base, WitnessMatrix(g.invertible(2)));
    auto c = classify(t);
    auto c0 = classify(base);
    CHECK(certified(t, c));
    if (c.label.kind != LabelKind::Bst && c0.label.kind != LabelKind::Bst)
      CHECK_MESSAGE(merged(c.label) == merged(c0.label), (l.str() + " -> " + c.label.str()));
    CHECK(decide_isomorphism(base, t).verdict != Verdict::No);
    if (c.label.kind == LabelKind::Bst) CHECK(c.label.s * c.label.t != Rational(1));
  }
}

TEST_CASE("finite labels that name the same class") {
  const std::vector<std::pair<LabelKind, LabelKind>> pairs = {{LabelKind::B9, LabelKind::B4},
                                                              {LabelKind::B11, LabelKind::B4},
                                                              {LabelKind::B7, LabelKind::B3},
                                                              {LabelKind::B10, LabelKind::B3},
                                                              {LabelKind::B8, LabelKind::B5}};
  for (const auto& [a, b] : pairs) {
    auto ta = canonical_tuple(ClassLabel::of(a)), tb = canonical_tuple(ClassLabel::of(b));
    auto v = decide_isomorphism(ta, tb);
    REQUIRE(v.verdict == Verdict::Yes);
    REQUIRE(v.witness);
    CHECK(check_witness(ta, tb, *v.witness));
  }
  // representatives of distinct merged classes are never declared isomorphic
  const std::vector<LabelKind> reps = {LabelKind::B0, LabelKind::B1, LabelKind::B2, LabelKind::B3,
                                       LabelKind::B4, LabelKind::B5, LabelKind::B6};
  for (auto a : reps)
    for (auto b : reps) {
      if (a == b) continue;
      auto v = decide_isomorphism(canonical_tuple(ClassLabel::of(a)), canonical_tuple(ClassLabel::of(b)));
      CHECK(v.verdict != Verdict::Yes);
    }
}

TEST_CASE("every grid instance of every family classifies to its target") {
  std::vector<Rational> grid{-2, -1, 1, 2};
  std::size_t total = 0;
  for (const auto& f : case_families()) {
    auto targets = expand_target(f.target == "as 14" ? "B5..B9" : f.target == "as 15" ? "B6/B8/B10/B11" : f.target);
    for (const auto& p : [&] {
           std::vector<CaseParams> out;
           std::vector<std::vector<Rational>> values;
           for (const auto& ps : f.params) {
             auto v = grid;
             if (!ps.nonzero) v.push_back(0);
             values.push_back(v);
           }
           std::vector<std::size_t> idx(values.size(), 0);
           while (true) {
             CaseParams q;
             for (std::size_t k = 0; k < idx.size(); ++k) *q.slot(f.params[k].name) = values[k][idx[k]];
             if (admissible(f, q)) out.push_back(q);
             std::size_t k = 0;
             while (k < idx.size() && ++idx[k] == values[k].size()) idx[k++] = 0;
             if (k == idx.size()) break;
           }
           return out;
         }()) {
      auto t = instantiate_case(f.id, p);
      auto c = classify(t);
      ++total;
      CHECK(certified(t, c));
      std::string got = c.label.kind == LabelKind::Bst ? "B(s,t)" : merged(c.label);
      // B(s,1/s) collapses to B8 (merged into B5) or B6
      bool ok = targets.count(got) || (targets.count("B(s,t)") && (got == "B5" || got == "B6"));
      CHECK_MESSAGE(ok, (std::string("case ") + f.id + " gave " + c.label.str() + ", table says " + f.target));
    }
  }
  CHECK(total > 1000);
}

TEST_CASE("exhaustive {-1,0,1} sweep") {
  std::size_t crisscross = 0, irrational = 0;
  std::map<std::string, std::size_t> labels;
  for (int code = 0; code < 6561; ++code) {
    int c = code;
    std::vector<RatMatrix> ms(2, RatMatrix(2, 2));
    for (int k = 0; k < 8; ++k) {
      ms[static_cast<size_t>(k / 4)]((k / 2) % 2, k % 2) = Rational(c % 3 - 1);
      c /= 3;
    }
    MatrixTuple t(ms);
    if (!oracle::crisscross_by_d2(t)) continue;
    ++crisscross;
    auto cl = classify(t);
    CHECK(certified(t, cl));
    if (!cl.chain.rational()) ++irrational;
    ++labels[cl.label.str()];
  }
  // count confirmed by an independent brute-force script
  CHECK(crisscross == 105);
  CHECK(irrational > 0);
  std::size_t sum = 0;
  for (const auto& [k, v] : labels) sum += v;
  CHECK(sum == 105);
}

TEST_CASE("witness catalog") {
  auto cat = witness_catalog();
  CHECK(cat.size() >= 20);
  for (const auto& e : cat) {
    CHECK_MESSAGE(check_witness(e.source, e.target, e.witness), e.name);
    auto inv = e.witness.inverse();
    REQUIRE(inv);
    CHECK_MESSAGE(check_witness(e.target, e.source, *inv), e.name);
    CHECK(stacked_rank(e.source) == stacked_rank(e.target));
    CHECK(is_symmetric_tuple(e.source) == is_symmetric_tuple(e.target));
  }
}

TEST_CASE("isomorphism decisions") {
  auto B1 = canonical_tuple(ClassLabel::of(LabelKind::B1)), B2 = canonical_tuple(ClassLabel::of(LabelKind::B2));
  auto v = decide_isomorphism(B1, B2);
  CHECK(v.verdict == Verdict::No);
  CHECK(v.reason == "stacked_rank 1 vs 2");

  auto B8 = canonical_tuple(ClassLabel::of(LabelKind::B8));
  auto Bst = canonical_tuple(ClassLabel::bst(2, Rational(1, 2)));
  WitnessMatrix w(RatMatrix{{2, Rational(5, 2)}, {3, Rational(3, 2)}});
  v = decide_isomorphism(B8, Bst, w);
  CHECK(v.verdict == Verdict::Yes);
  CHECK(v.supplied_witness_ok == true);

  v = decide_isomorphism(B8, B8);
  CHECK(v.verdict == Verdict::Yes);
  REQUIRE(v.witness);
  CHECK(*v.witness == WitnessMatrix::identity(2));

  // different classes with equal invariants
  auto B5 = canonical_tuple(ClassLabel::of(LabelKind::B5)), B6 = canonical_tuple(ClassLabel::of(LabelKind::B6));
  if (stacked_rank(B5) == stacked_rank(B6) && is_symmetric_tuple(B5) == is_symmetric_tuple(B6))
    CHECK(decide_isomorphism(B5, B6).verdict != Verdict::Yes);

  // n = 3 beyond identical tuples is undecided
  oracle::Gen g(54);
  auto m3 = g.crisscross(3);
  auto t3 = transport(m3, WitnessMatrix(g.invertible(3)));
  if (!(m3 == t3)) CHECK(decide_isomorphism(m3, t3).verdict == Verdict::Undecided);
  CHECK(decide_isomorphism(m3, t3, WitnessMatrix(RatMatrix::identity(3))).verdict != Verdict::No);
}

TEST_CASE("property: decisions on random pairs are sound") {
  oracle::Gen g(55);
  for (int iter = 0; iter < 150; ++iter) {
    auto la = g.label(), lb = g.coin() ? la : g.label();
    auto a = transport(canonical_tuple(la), WitnessMatrix(g.invertible(2)));
    auto b = transport(canonical_tuple(lb), WitnessMatrix(g.invertible(2)));
    auto v = decide_isomorphism(a, b);
    if (v.verdict == Verdict::Yes) {
      if (v.witness) CHECK(check_witness(a, b, *v.witness));
      else {
        REQUIRE(v.extension_witness);
        CHECK(check_witness(a, b, *v.extension_witness));
      }
    }
    if (v.verdict == Verdict::No)
      CHECK((v.report.rank_a != v.report.rank_b || v.report.symmetric_a != v.report.symmetric_b));
    // a and b built from the same class are never called non-isomorphic, and are decided
    // whenever neither classification ends in the B(s,t) family
    if (merged(classify(canonical_tuple(la)).label) == merged(classify(canonical_tuple(lb)).label)) {
      CHECK(v.verdict != Verdict::No);
      if (classify(a).label.kind != LabelKind::Bst && classify(b).label.kind != LabelKind::Bst)
        CHECK(v.verdict == Verdict::Yes);
    }
  }
}
