#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include "dgfree/errors.hpp"

namespace dgfree::io {

json rational_json(const Rational& r) { return r.str(); }

Rational rational_from(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

json surd_json(const Surd& s) { return s.str(); }

Surd parse_surd(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return Surd(Rational::parse(s));
  auto close = s.find(')', pos);
  if (close == std::string::npos || close + 1 != s.size()) throw ParseError("bad surd '" + text + "'");
  Integer d(s.substr(pos + 5, close - pos - 5), 10);
  std::string left = s.substr(0, pos);
  std::size_t split = std::string::npos;
  for (std::size_t k = left.size(); k-- > 1;)
    if (left[k] == '+' || left[k] == '-') {
      split = k;
      break;
    }
  Rational a(0);
  std::string bpart = left;
  if (split != std::string::npos) {
    a = Rational::parse(left.substr(0, split));
    bpart = left.substr(split);
  }
  if (!bpart.empty() && bpart.back() == '*') bpart.pop_back();
  Rational b = (bpart.empty() || bpart == "+") ? Rational(1) : (bpart == "-" ? Rational(-1) : Rational::parse(bpart));
  return Surd(a) + Surd(b) * Surd::sqrt(Rational(d));
}

namespace {

template <class T, class F>
json matrix_json_impl(const Matrix<T>& m, F&& f) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(f(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class T, class F>
Matrix<T> matrix_from_impl(const json& j, int n, F&& f) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw ParseError("expected " + std::to_string(n) + " rows");
  Matrix<T> m(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("expected rows of length " + std::to_string(n));
    for (int k = 0; k < n; ++k) m(i, k) = f(row[static_cast<size_t>(k)]);
  }
  return m;
}

int read_n(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer field 'n'");
  int n = j["n"].get<int>();
  if (n < 1 || n > 16) throw ParseError("n out of range");
  return n;
}

}  // namespace

json matrix_json(const RatMatrix& m) { return matrix_json_impl(m, [](const Rational& r) { return rational_json(r); }); }
json matrix_json(const SurdMatrix& m) { return matrix_json_impl(m, [](const Surd& s) { return surd_json(s); }); }

RatMatrix matrix_from(const json& j, int n) {
  return matrix_from_impl<Rational>(j, n, [](const json& x) { return rational_from(x); });
}

SurdMatrix surd_matrix_from(const json& j, int n) {
  return matrix_from_impl<Surd>(j, n, [](const json& x) {
    if (x.is_string()) return parse_surd(x.get<std::string>());
    return Surd(rational_from(x));
  });
}

json tuple_json(const MatrixTuple& t) {
  json ms = json::array();
  for (const auto& m : t.matrices()) ms.push_back(matrix_json(m));
  return {{"n", t.n()}, {"matrices", ms}};
}

MatrixTuple tuple_from(const json& j) {
  int n = read_n(j);
  if (!j.contains("matrices") || !j["matrices"].is_array() || static_cast<int>(j["matrices"].size()) != n)
    throw ParseError("expected 'matrices' with n entries");
  std::vector<RatMatrix> ms;
  for (const auto& m : j["matrices"]) ms.push_back(matrix_from(m, n));
  return MatrixTuple(std::move(ms));
}

json witness_json(const WitnessMatrix& w) { return {{"n", w.n()}, {"entries", matrix_json(w.entries())}}; }

WitnessMatrix witness_from(const json& j) {
  int n = read_n(j);
  if (!j.contains("entries")) throw ParseError("witness needs 'entries'");
  return WitnessMatrix(matrix_from(j["entries"], n));
}

json label_json(const Classification& c) {
  json out = {{"label", c.label.str()}, {"route", c.route}};
  if (c.label.kind == LabelKind::Bst) {
    out["s"] = rational_json(c.label.s);
    out["t"] = rational_json(c.label.t);
  }
  json ws = json::array();
  for (const auto& s : c.chain.steps) ws.push_back(matrix_json(s));
  out["witnesses"] = ws;
  SurdMatrix comp = c.chain.composed();
  out["composed"] = matrix_json(comp);
  std::string field = "Q";
  for (int i = 0; i < comp.rows(); ++i)
    for (int k = 0; k < comp.cols(); ++k)
      if (!comp(i, k).is_rational()) field = "Q(sqrt(" + comp(i, k).radicand().get_str() + "))";
  out["witness_field"] = field;
  return out;
}

json cohomology_json(const CohomologyReport& r) {
  json degs = json::array();
  for (const auto& d : r.degrees) {
    json reps = json::array();
    for (const auto& e : d.representatives) reps.push_back(e.str());
    degs.push_back({{"degree", d.degree},
                    {"dim_component", d.dim_component},
                    {"rank_d", d.rank_d},
                    {"dim_ker", d.dim_ker},
                    {"dim_H", d.dim_H},
                    {"representatives", reps}});
  }
  return {{"n", r.n}, {"max_degree", static_cast<int>(r.degrees.size()) - 1}, {"dims", r.dims()}, {"degrees", degs}};
}

std::string cohomology_tsv(const CohomologyReport& r) {
  std::ostringstream os;
  os << "degree\tdim_component\trank_d\tdim_ker\tdim_H\n";
  for (const auto& d : r.degrees)
    os << d.degree << '\t' << d.dim_component << '\t' << d.rank_d << '\t' << d.dim_ker << '\t' << d.dim_H << '\n';
  return os.str();
}

json verdict_json(const IsoVerdict& v) {
  static const char* kind[] = {"yes-with-witness", "no-by-invariant", "undecided"};
  json out = {{"verdict", verdict_name(v.verdict)},
              {"isomorphic", kind[static_cast<int>(v.verdict)]},
              {"reason", v.reason},
              {"invariants",
               {{"stacked_rank", {v.report.rank_a, v.report.rank_b}},
                {"symmetric", {v.report.symmetric_a, v.report.symmetric_b}}}}};
  if (v.witness) out["witness"] = witness_json(*v.witness);
  if (v.extension_witness)
    out["extension_witness"] = {{"n", v.extension_witness->rows()}, {"entries", matrix_json(*v.extension_witness)}};
  if (v.supplied_witness_ok) out["supplied_witness_valid"] = *v.supplied_witness_ok;
  return out;
}

json endo_json(const EndoAlgebraReport& r) {
  json basis = json::array();
  for (const auto& b : r.basis) basis.push_back(matrix_json(b));
  json table = json::array();
  for (const auto& row : r.table) {
    json jr = json::array();
    for (const auto& cell : row) {
      json c = json::array();
      for (const auto& x : cell) c.push_back(rational_json(x));
      jr.push_back(c);
    }
    table.push_back(jr);
  }
  json out = {{"dimension", r.dimension},     {"basis", basis},
              {"table", table},               {"contains_identity", r.contains_identity},
              {"closed", r.closed},           {"commutative", r.commutative},
              {"radical_dimension", r.radical_dimension}, {"power_basis", r.power_basis}};
  out["local"] = r.local ? json(*r.local) : json(nullptr);
  out["radical_nilpotency"] = r.radical_nilpotency ? json(*r.radical_nilpotency) : json(nullptr);
  out["generator"] = r.generator ? matrix_json(*r.generator) : json(nullptr);
  out["generator_nilpotency"] = r.generator_nilpotency ? json(*r.generator_nilpotency) : json(nullptr);
  return out;
}

FreeDGModule module_from(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("basis") || !j.contains("diff"))
    throw ParseError("module needs 'algebra', 'basis' and 'diff'");
  json alg = j["algebra"];
  if (alg.is_string()) alg = read_json_file(base_dir / alg.get<std::string>());
  DGFreeAlgebra A(tuple_from(alg));
  std::vector<ModuleBasisElement> basis;
  for (const auto& b : j["basis"]) {
    if (!b.is_array() || b.size() != 2 || !b[0].is_string() || !b[1].is_number_integer())
      throw ParseError("basis entries are [name, degree]");
    basis.push_back({b[0].get<std::string>(), b[1].get<int>()});
  }
  std::vector<std::vector<Element>> D;
  for (const auto& row : j["diff"]) {
    if (!row.is_array()) throw ParseError("diff rows must be arrays");
    std::vector<Element> r;
    for (const auto& e : row) {
      if (!e.is_string() && !e.is_number_integer()) throw ParseError("diff entries are element strings");
      r.push_back(Element::parse(A.n(), e.is_string() ? e.get<std::string>() : std::to_string(e.get<long>())));
    }
    D.push_back(std::move(r));
  }
  return make_module(std::move(A), std::move(basis), std::move(D));
}

json module_json(const FreeDGModule& f) {
  json basis = json::array();
  for (const auto& b : f.basis()) basis.push_back({b.name, b.degree});
  json diff = json::array();
  for (const auto& row : f.diff()) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.str());
    diff.push_back(r);
  }
  return {{"algebra", tuple_json(f.algebra().tuple())}, {"basis", basis}, {"diff", diff}};
}

json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot read " + p.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(p.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& p, const json& j) {
  std::ofstream out(p);
  if (!out) throw Error("cannot write " + p.string());
  out << j.dump(2) << '\n';
}

}  // namespace dgfree::io
