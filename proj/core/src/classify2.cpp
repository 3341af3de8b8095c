#include "dgfree/classify2.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "dgfree/errors.hpp"

namespace dgfree {

using R = Rational;

const std::array<const char*, 12> kResidualNames = {"1.1", "1.2", "1.3", "1.4", "2.1", "2.2",
                                                    "2.3", "2.4", "3.1", "3.2", "3.3", "3.4"};

std::vector<Rational> crisscross_equations_n2(const MatrixTuple& t) {
  if (t.n() != 2) throw DimensionMismatch("crisscross_equations_n2 needs n = 2");
  // mI(j,k) = m^I_{jk}; written out exactly as the three displayed systems
  auto m1 = [&](int j, int k) { return t.m(1, j, k); };
  auto m2 = [&](int j, int k) { return t.m(2, j, k); };
  return {
      m2(1, 1) * m1(2, 1) - m1(1, 2) * m2(1, 1),
      m2(1, 1) * m1(2, 2) - m1(1, 2) * m2(1, 2),
      m2(2, 1) * m1(2, 1) - m1(2, 2) * m2(1, 1),
      m2(2, 1) * m1(2, 2) - m1(2, 2) * m2(1, 2),

      m1(1, 2) * m1(1, 1) - m1(1, 1) * m1(2, 1) + m2(1, 2) * m1(2, 1) - m1(1, 2) * m2(2, 1),
      m1(1, 2) * m1(1, 2) - m1(1, 1) * m1(2, 2) + m2(1, 2) * m1(2, 2) - m1(1, 2) * m2(2, 2),
      m1(2, 2) * m1(1, 1) - m1(2, 1) * m1(2, 1) + m1(2, 1) * m2(2, 2) - m1(2, 2) * m2(2, 1),
      m1(2, 2) * m1(1, 2) - m1(2, 1) * m1(2, 2),

      m2(1, 1) * m2(2, 1) - m2(1, 2) * m2(1, 1),
      m1(1, 1) * m2(1, 2) - m2(1, 1) * m1(1, 2) + m2(1, 1) * m2(2, 2) - m2(1, 2) * m2(1, 2),
      m1(2, 1) * m2(1, 1) - m2(2, 1) * m1(1, 1) + m2(2, 1) * m2(2, 1) - m2(2, 2) * m2(1, 1),
      m1(2, 1) * m2(1, 2) - m2(2, 1) * m1(1, 2) + m2(2, 1) * m2(2, 2) - m2(2, 2) * m2(1, 2),
  };
}

// ---- parameters and families

std::optional<Rational>* CaseParams::slot(const std::string& name) {
  if (name == "lambda") return &lambda;
  if (name == "mu") return &mu;
  if (name == "nu") return &nu;
  if (name == "omega") return &omega;
  throw DomainError("unknown parameter '" + name + "'");
}

const std::optional<Rational>* CaseParams::slot(const std::string& name) const {
  return const_cast<CaseParams*>(this)->slot(name);
}

Rational CaseParams::get(const std::string& name) const {
  const auto* s = slot(name);
  if (!s->has_value()) throw DomainError("parameter " + name + " is not set");
  return **s;
}

namespace {

RatMatrix m22(const R& a, const R& b, const R& c, const R& d) { return RatMatrix{{a, b}, {c, d}}; }

MatrixTuple pair(RatMatrix a, RatMatrix b) { return MatrixTuple({std::move(a), std::move(b)}); }

std::vector<CaseFamily> build_families() {
  const ParamSpec L{"lambda", false}, Lx{"lambda", true}, Mu{"mu", false}, Mux{"mu", true},
      Nu{"nu", false}, Nux{"nu", true}, Om{"omega", false}, Omx{"omega", true};
  std::vector<CaseFamily> f = {
      {"1", "", {Mux, L}, "", "B3/B4"},
      {"2", "", {Nux}, "", "B1"},
      {"3", "", {Nux}, "", "B2"},
      {"4", "", {L, Mu}, "", "B0/B4/B5"},
      {"5", "", {Mux, Nu}, "", "B2"},
      {"6", "", {Mu, Nux}, "", "B2"},
      {"7", "", {Lx, Mux}, "", "B4"},
      {"8", "", {Mux}, "", "B1"},
      {"9", "", {Nux}, "", "B3"},
      {"10", "", {Mux}, "", "B2"},
      {"11", "", {Mux, Nu}, "", "B1"},
      {"12", "", {Mu, Nux}, "", "B1"},
      {"13", "", {Mux, Nux, Lx, Om}, "", "B(s,t)"},
      {"14", "", {Lx, Mu, Om}, "", "B5..B9"},
      {"14.1", "14", {Lx, Mu, Om}, "omega=0, mu!=0", "B5"},
      {"14.2", "14", {Lx, Mu, Om}, "omega=mu=0", "B6"},
      {"14.3", "14", {Lx, Mu, Om}, "mu=omega!=0", "B7"},
      {"14.4", "14", {Lx, Mu, Om}, "omega!=0, mu=0", "B8"},
      {"14.5", "14", {Lx, Mu, Om}, "omega!=0, mu!=0, mu!=omega", "B9"},
      {"15", "", {Lx, Mu, Om}, "", "B6/B8/B10/B11"},
      {"15.1", "15", {Lx, Mu, Om}, "omega,mu!=0, omega*lambda+mu^2/4!=0", "B11"},
      {"15.2", "15", {Lx, Mu, Om}, "omega,mu!=0, omega*lambda+mu^2/4=0", "B10"},
      {"15.3", "15", {Lx, Mu, Om}, "omega=mu=0", "B6"},
      {"15.4", "15", {Lx, Mu, Om}, "mu=0, omega!=0", "B11"},
      {"15.5", "15", {Lx, Mu, Om}, "mu!=0, omega=0", "B8"},
      {"16", "", {Lx, Mu, Om}, "", "as 14"},
      {"17", "", {Lx, Mu, Om}, "", "as 15"},
  };
  return f;
}

// fills what a sub-case pins down, then tests its condition
bool subcase_holds(const std::string& id, CaseParams& p) {
  auto fill = [&](std::optional<R>& s, const R& v) {
    if (!s) s = v;
  };
  if (id == "14.1" || id == "15.5") fill(p.omega, R(0));
  if (id == "14.2" || id == "15.3") {
    fill(p.omega, R(0));
    fill(p.mu, R(0));
  }
  if (id == "14.3" && p.mu) fill(p.omega, *p.mu);
  if (id == "14.4" || id == "15.4") fill(p.mu, R(0));
  if (id == "15.2" && p.mu && p.omega && !p.omega->is_zero())
    fill(p.lambda, -(*p.mu * *p.mu) / (R(4) * *p.omega));
  if (!p.lambda || !p.mu || !p.omega) return true;  // reported as missing later
  const R &mu = *p.mu, &om = *p.omega, &la = *p.lambda;
  bool m0 = mu.is_zero(), w0 = om.is_zero();
  R disc = R(4) * om * la + mu * mu;
  if (id == "14.1") return w0 && !m0;
  if (id == "14.2") return w0 && m0;
  if (id == "14.3") return !m0 && mu == om;
  if (id == "14.4") return !w0 && m0;
  if (id == "14.5") return !w0 && !m0 && mu != om;
  if (id == "15.1") return !w0 && !m0 && !disc.is_zero();
  if (id == "15.2") return !w0 && !m0 && disc.is_zero();
  if (id == "15.3") return w0 && m0;
  if (id == "15.4") return m0 && !w0;
  if (id == "15.5") return !m0 && w0;
  return true;
}

MatrixTuple build_case(const std::string& base, const CaseParams& p) {
  auto g = [&](const char* n) { return p.get(n); };
  const R zero(0);
  int id = std::stoi(base);
  switch (id) {
    case 1: {
      R mu = g("mu"), la = g("lambda");
      return pair(m22(mu, zero, zero, zero), m22(zero, mu, mu, la));
    }
    case 2: {
      R nu = g("nu");
      return pair(m22(nu, zero, zero, zero), m22(zero, zero, nu, zero));
    }
    case 3: {
      R nu = g("nu");
      return pair(m22(nu, zero, zero, zero), m22(zero, nu, zero, zero));
    }
    case 4:
      return pair(m22(g("lambda"), zero, zero, zero), m22(zero, zero, zero, g("mu")));
    case 5:
    case 6: {
      R mu = g("mu"), nu = g("nu");
      return pair(m22(nu, zero, mu, zero), m22(zero, nu, zero, mu));
    }
    case 7: {
      R la = g("lambda"), mu = g("mu");
      return pair(m22(la, mu, mu, zero), m22(zero, zero, zero, mu));
    }
    case 8: {
      R mu = g("mu");
      return pair(m22(zero, mu, zero, zero), m22(zero, zero, zero, mu));
    }
    case 9: {
      R nu = g("nu");
      return pair(m22(zero, nu, nu, zero), m22(zero, zero, zero, nu));
    }
    case 10: {
      R mu = g("mu");
      return pair(m22(zero, zero, mu, zero), m22(zero, zero, zero, mu));
    }
    case 11:
    case 12: {
      R mu = g("mu"), nu = g("nu");
      return pair(m22(nu, mu, zero, zero), m22(zero, zero, nu, mu));
    }
    case 13: {
      R mu = g("mu"), nu = g("nu"), la = g("lambda"), om = g("omega");
      return pair(m22(nu + la * (mu - om), mu, mu, mu / la), m22(la * nu, nu, nu, om));
    }
    case 14: {
      R la = g("lambda"), mu = g("mu"), om = g("omega");
      return pair(m22(mu * (mu - om) / la, mu, mu, la), m22(zero, zero, zero, om));
    }
    case 15: {
      R la = g("lambda"), mu = g("mu"), om = g("omega");
      return pair(m22(om, zero, zero, la), m22(zero, om, om, mu));
    }
    case 16: {
      R la = g("lambda"), mu = g("mu"), om = g("omega");
      return pair(m22(om, zero, zero, zero), m22(la, mu, mu, mu * (mu - om) / la));
    }
    case 17: {
      R la = g("lambda"), mu = g("mu"), om = g("omega");
      return pair(m22(mu, om, om, zero), m22(la, zero, zero, om));
    }
    default:
      throw DomainError("unknown case " + base);
  }
}

}  // namespace

const std::vector<CaseFamily>& case_families() {
  static const std::vector<CaseFamily> f = build_families();
  return f;
}

const CaseFamily& case_family(const std::string& id) {
  for (const auto& f : case_families())
    if (f.id == id) return f;
  throw DomainError("unknown case id '" + id + "'");
}

bool admissible(const CaseFamily& f, CaseParams& p, std::string* why) {
  auto fail = [&](const std::string& w) {
    if (why) *why = "case " + f.id + ": " + w;
    return false;
  };
  bool sub_ok = f.parent.empty() || subcase_holds(f.id, p);
  for (const auto& ps : f.params) {
    const auto* s = p.slot(ps.name);
    if (!s->has_value()) return fail("parameter " + ps.name + " missing");
    if (ps.nonzero && (*s)->is_zero()) return fail(ps.name + " must be nonzero");
  }
  if (!sub_ok) return fail("condition " + f.condition + " violated");
  return true;
}

MatrixTuple instantiate_case(const std::string& id, CaseParams p) {
  const CaseFamily& f = case_family(id);
  std::string why;
  if (!admissible(f, p, &why)) throw DomainError(why);
  return build_case(f.parent.empty() ? f.id : f.parent, p);
}

// ---- labels

std::string ClassLabel::str() const {
  if (kind == LabelKind::Bst) return "B(" + s.str() + "," + t.str() + ")";
  return "B" + std::to_string(static_cast<int>(kind));
}

ClassLabel ClassLabel::parse(const std::string& text) {
  if (text.size() >= 2 && text[0] == 'B' && text[1] == '(') {
    auto comma = text.find(',');
    if (comma == std::string::npos || text.back() != ')') throw ParseError("bad label '" + text + "'");
    return bst(R::parse(text.substr(2, comma - 2)), R::parse(text.substr(comma + 1, text.size() - comma - 2)));
  }
  if (text.size() >= 2 && text[0] == 'B') {
    int k = -1;
    try {
      size_t used = 0;
      k = std::stoi(text.substr(1), &used);
      if (used != text.size() - 1) k = -1;
    } catch (...) {
      k = -1;
    }
    if (k >= 0 && k <= 11) return of(static_cast<LabelKind>(k));
  }
  throw ParseError("bad label '" + text + "'");
}

MatrixTuple canonical_tuple(const ClassLabel& label) {
  const R o(0), i(1);
  switch (label.kind) {
    case LabelKind::B0: return MatrixTuple::zero(2);
    case LabelKind::B1: return pair(m22(i, o, o, o), m22(o, o, i, o));
    case LabelKind::B2: return pair(m22(i, o, o, o), m22(o, i, o, o));
    case LabelKind::B3: return pair(m22(i, o, o, o), m22(o, i, i, o));
    case LabelKind::B4: return pair(m22(i, o, o, o), m22(o, o, o, i));
    case LabelKind::B5: return pair(m22(i, o, o, o), m22(o, o, o, o));
    case LabelKind::B6: return pair(m22(o, o, o, i), m22(o, o, o, o));
    case LabelKind::B7: return pair(m22(o, i, i, i), m22(o, o, o, i));
    case LabelKind::B8: return pair(m22(o, o, o, i), m22(o, o, o, i));
    case LabelKind::B9: return pair(m22(i, i, i, o), m22(o, o, o, i));
    case LabelKind::B10: return pair(m22(i, o, o, R(-1, 4)), m22(o, i, i, i));
    case LabelKind::B11: return pair(m22(i, o, o, i), m22(o, i, i, o));
    case LabelKind::Bst: {
      const R &s = label.s, &t = label.t;
      if (s.is_zero()) throw DomainError("B(s,t) needs s != 0");
      return pair(m22(i + s - s * t, i, i, s.inverse()), m22(s, i, i, t));
    }
  }
  throw DomainError("bad label");
}

SurdMatrix WitnessChain::composed() const {
  SurdMatrix acc = SurdMatrix::identity(n);
  for (const auto& s : steps) acc = acc * s;
  return acc;
}

bool WitnessChain::rational() const {
  for (const auto& s : steps)
    if (!to_rational(s)) return false;
  return true;
}

// ---- witness formulas from the proof tables (source -> target)

namespace {

SurdMatrix sm(const Surd& a, const Surd& b, const Surd& c, const Surd& d) {
  SurdMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

SurdMatrix inv(const SurdMatrix& m) {
  auto i = m.inverse();
  if (!i) throw std::logic_error("singular witness in chain");
  return *i;
}

const SurdMatrix& swap_w() {
  static const SurdMatrix s = sm(0, 1, 1, 0);
  return s;
}

SurdMatrix w_2_8(const R& nu, const R& mu) { return sm(0, mu / nu, 1, 0); }
SurdMatrix w_8_11(const R& mu, const R& nu) { return sm(1, 0, nu / mu, 1); }
SurdMatrix w_3_6(const R& mu, const R& nu) { return sm(1, mu / nu, 0, 1); }
SurdMatrix w_10_5(const R& mu, const R& nu) { return sm(R(1) + nu * nu / (mu * mu), nu / mu, nu / mu, 1); }
SurdMatrix w_3_10(const R& nu, const R& mu) { return sm(0, mu / nu, 1, 0); }
SurdMatrix w_4_7(const R& la, const R& mu) { return sm(0, mu / la, la / mu, 1); }
SurdMatrix w_4_b4(const R& la, const R& mu) { return sm(la.inverse(), 0, 0, mu.inverse()); }
SurdMatrix w_1_9(const R& mu, const R& nu) { return sm(0, nu / mu, 1, 0); }
SurdMatrix w_4_4(const R& la, const R& mu) { return sm(0, mu / la, 1, 0); }  // (la,0) -> (0,mu)

SurdMatrix w_14_1(const R& la, const R& mu) { return sm(la / (mu * mu), -la, 0, mu); }
SurdMatrix w_14_2(const R& la) { return sm(la, 0, 0, 1); }
SurdMatrix w_14_3(const R& la, const R& mu) { return sm(la / (mu * mu), 0, 0, mu.inverse()); }
SurdMatrix w_14_4(const R& la, const R& om) { return sm(la / (om * om), 0, 0, om.inverse()); }
SurdMatrix w_14_5(const R& la, const R& mu, const R& om) {
  return sm(la / (mu * (mu - om)), -la / (mu * om), 0, om.inverse());
}

SurdMatrix w_15_1(const R& la, const R& mu, const R& om) {
  Surd r = Surd::sqrt(R(4) * om * la + mu * mu);
  return sm(om.inverse(), Surd(-mu / om) / r, 0, Surd(2) / r);
}
SurdMatrix w_15_2(const R& mu, const R& om) { return sm(om.inverse(), 0, 0, mu.inverse()); }
SurdMatrix w_15_3(const R& la) { return sm(la, 0, 0, 1); }
SurdMatrix w_15_4(const R& la, const R& om) {
  return sm(om.inverse(), 0, 0, Surd(1) / Surd::sqrt(la * om));
}
SurdMatrix w_15_5(const R& la, const R& mu) { return sm(la / (mu * mu), 0, 0, mu.inverse()); }

SurdMatrix w_13(const R& mu, const R& nu) { return sm(nu.inverse(), 0, 0, mu.inverse()); }
SurdMatrix w_b8_bs(const R& s) { return sm(s, s.inverse() + R(2), s + R(1), (s + R(1)) / s); }
SurdMatrix w_b6_bm1() { return sm(-1, 0, 1, -1); }

// certifies canonical(B11) ~ B4 and canonical(B9) ~ B4
SurdMatrix w_b11_b4() { return sm(R(1, 2), R(1, 2), R(1, 2), R(-1, 2)); }
SurdMatrix w_b9_b4() { return inv(w_4_7(1, 1)) * w_4_b4(1, 1); }
// the list of labels is not irredundant: these pairs are isomorphic over Q
SurdMatrix w_b7_b3() { return sm(-1, 3, 1, 0); }
SurdMatrix w_b10_b3() { return sm(1, -1, 0, 2); }
SurdMatrix w_b8_b5() { return sm(1, 1, 1, 0); }

struct Run {
  const MatrixTuple& input;
  Classification c;

  void step(const SurdMatrix& m) { c.chain.steps.push_back(m); }
  void route(const std::string& id) { c.route.push_back(id); }
  void label(LabelKind k) { c.label = ClassLabel::of(k); }

  void expect(const std::string& id, const CaseParams& p, const MatrixTuple& t) {
    MatrixTuple inst;
    try {
      inst = instantiate_case(id, p);
    } catch (const DomainError& e) {
      throw std::logic_error(std::string("classify: parameters outside case ") + id + ": " + e.what());
    }
    if (!(inst == t)) throw std::logic_error("classify: tuple does not fit case " + id);
  }

  // ---- non-symmetric chains
  void chain2(const R& nu) {
    step(w_2_8(nu, 1));
    step(inv(w_2_8(1, 1)));
    label(LabelKind::B1);
  }
  void chain8(const R& mu) {
    step(inv(w_2_8(1, mu)));
    label(LabelKind::B1);
  }
  void chain11(const R& mu, const R& nu) {
    step(inv(w_8_11(mu, nu)));
    chain8(mu);
  }
  void chain3(const R& nu) {
    step(w_3_10(nu, 1));
    step(inv(w_3_10(1, 1)));
    label(LabelKind::B2);
  }
  void chain10(const R& mu) {
    step(inv(w_3_10(1, mu)));
    label(LabelKind::B2);
  }
  void chain5(const R& mu, const R& nu) {
    step(inv(w_10_5(mu, nu)));
    chain10(mu);
  }
  void chain6(const R& mu, const R& nu) {
    step(inv(w_3_6(mu, nu)));
    chain3(nu);
  }

  // ---- symmetric, m1_22 = m2_11 = 0
  void chain7(const R& la, const R& mu) {
    step(inv(w_4_7(la, mu)));
    step(w_4_b4(la, mu));
    label(LabelKind::B4);
  }
  void chain1(const R& mu, const R& la) {
    if (!la.is_zero()) {
      step(swap_w());  // case 1 (mu,la) -> case 7 (la,mu)
      chain7(la, mu);
    } else {
      step(w_1_9(mu, 1));
      step(inv(w_1_9(1, 1)));
      label(LabelKind::B3);
    }
  }
  void chain9(const R& nu) {
    step(inv(w_1_9(1, nu)));
    label(LabelKind::B3);
  }
  void chain4(const R& la, const R& mu) {
    if (!la.is_zero() && !mu.is_zero()) {
      step(w_4_b4(la, mu));
      label(LabelKind::B4);
    } else if (!la.is_zero()) {
      step(w_4_4(la, 1));
      step(inv(w_4_4(1, 1)));
      label(LabelKind::B5);
    } else if (!mu.is_zero()) {
      step(inv(w_4_4(1, mu)));
      label(LabelKind::B5);
    } else {
      label(LabelKind::B0);
    }
  }

  void branch_a(const MatrixTuple& t) {
    const R a = t.m(1, 1, 1), b = t.m(1, 1, 2), c = t.m(1, 2, 1);
    const R e = t.m(2, 1, 2), f = t.m(2, 2, 1), g = t.m(2, 2, 2);
    auto z = [](const R& x) { return x.is_zero(); };
    CaseParams p;
    if (is_symmetric_tuple(t)) {
      if (z(b) && z(c) && !z(e) && !z(f)) {
        route("1");
        p.mu = a;
        p.lambda = g;
        expect("1", p, t);
        chain1(a, g);
      } else if (z(b) && z(c) && z(e) && z(f)) {
        route("4");
        p.lambda = a;
        p.mu = g;
        expect("4", p, t);
        chain4(a, g);
      } else if (z(e) && z(f) && !z(a) && !z(b)) {
        route("7");
        p.lambda = a;
        p.mu = b;
        expect("7", p, t);
        chain7(a, b);
      } else if (z(e) && z(f) && z(a) && !z(b) && !z(c)) {
        route("9");
        p.nu = b;
        expect("9", p, t);
        chain9(b);
      } else {
        throw std::logic_error("classify: symmetric tuple matches no case of the first table");
      }
      return;
    }
    if (z(b) && z(c) && z(e) && !z(f)) {
      route("2");
      p.nu = a;
      expect("2", p, t);
      chain2(a);
    } else if (z(b) && z(c) && !z(e) && z(f)) {
      route("3");
      p.nu = a;
      expect("3", p, t);
      chain3(a);
    } else if (z(b) && z(f) && !z(c)) {
      route("5");
      p.mu = c;
      p.nu = a;
      expect("5", p, t);
      chain5(c, a);
    } else if (z(b) && z(f) && !z(e)) {
      route("6");
      p.mu = c;
      p.nu = a;
      expect("6", p, t);
      chain6(c, a);
    } else if (z(e) && z(f) && z(a) && !z(b) && z(c)) {
      route("8");
      p.mu = b;
      expect("8", p, t);
      chain8(b);
    } else if (z(e) && z(f) && z(a) && z(b) && !z(c)) {
      route("10");
      p.mu = c;
      expect("10", p, t);
      chain10(c);
    } else if (z(e) && z(c) && !z(b)) {
      route("11");
      p.mu = b;
      p.nu = a;
      expect("11", p, t);
      chain11(b, a);
    } else if (z(e) && z(c) && !z(f)) {
      route("12");
      p.mu = b;
      p.nu = a;
      expect("12", p, t);
      if (!z(b)) {
        route("11");
        chain11(b, a);
      } else {
        route("2");
        chain2(a);
      }
    } else {
      throw std::logic_error("classify: tuple matches no case of the first table");
    }
  }

  // ---- symmetric, general
  void case14(const MatrixTuple& u) {
    CaseParams p;
    p.lambda = u.m(1, 2, 2);
    p.mu = u.m(1, 1, 2);
    p.omega = u.m(2, 2, 2);
    route("14");
    expect("14", p, u);
    const R la = *p.lambda, mu = *p.mu, om = *p.omega;
    if (om.is_zero() && !mu.is_zero()) {
      route("14.1");
      step(w_14_1(la, mu));
      label(LabelKind::B5);
    } else if (om.is_zero()) {
      route("14.2");
      step(w_14_2(la));
      label(LabelKind::B6);
    } else if (mu == om) {
      route("14.3");
      step(w_14_3(la, mu));
      label(LabelKind::B7);
    } else if (mu.is_zero()) {
      route("14.4");
      step(w_14_4(la, om));
      label(LabelKind::B8);
    } else {
      route("14.5");
      step(w_14_5(la, mu, om));
      label(LabelKind::B9);
    }
  }

  void case15(const MatrixTuple& u) {
    CaseParams p;
    p.lambda = u.m(1, 2, 2);
    p.omega = u.m(1, 1, 1);
    p.mu = u.m(2, 2, 2);
    route("15");
    expect("15", p, u);
    const R la = *p.lambda, mu = *p.mu, om = *p.omega;
    if (!om.is_zero() && !mu.is_zero()) {
      if (!(R(4) * om * la + mu * mu).is_zero()) {
        route("15.1");
        step(w_15_1(la, mu, om));
        label(LabelKind::B11);
      } else {
        route("15.2");
        step(w_15_2(mu, om));
        label(LabelKind::B10);
      }
    } else if (om.is_zero() && mu.is_zero()) {
      route("15.3");
      step(w_15_3(la));
      label(LabelKind::B6);
    } else if (mu.is_zero()) {
      route("15.4");
      step(w_15_4(la, om));
      label(LabelKind::B11);
    } else {
      route("15.5");
      step(w_15_5(la, mu));
      label(LabelKind::B8);
    }
  }

  void case13(const MatrixTuple& t) {
    route("13");
    CaseParams p;
    const R p22 = t.m(1, 2, 2);
    p.mu = t.m(1, 1, 2);
    p.nu = t.m(2, 1, 2);
    p.omega = t.m(2, 2, 2);
    if (p.mu->is_zero()) throw std::logic_error("classify: case 13 with mu = 0");
    p.lambda = *p.mu / p22;
    expect("13", p, t);
    const R la = *p.lambda, mu = *p.mu, nu = *p.nu, om = *p.omega;
    step(w_13(mu, nu));
    R s = la * mu / nu, tt = om / mu;
    if (s * tt == R(1)) {
      route("B(s,1/s)");
      if (s != R(-1)) {
        step(inv(w_b8_bs(s)));
        label(LabelKind::B8);
      } else {
        step(inv(w_b6_bm1()));
        label(LabelKind::B6);
      }
    } else {
      c.label = ClassLabel::bst(s, tt);
    }
  }

  void branch_b(const MatrixTuple& t) {
    const R p = t.m(1, 2, 2), q = t.m(2, 1, 1);
    const R b = t.m(1, 1, 2), e = t.m(2, 1, 2);
    if (!p.is_zero() && !q.is_zero()) {
      case13(t);
    } else if (q.is_zero() && e.is_zero()) {
      case14(t);
    } else if (q.is_zero() && b.is_zero()) {
      case15(t);
    } else if (p.is_zero() && b.is_zero()) {
      route("16");
      CaseParams cp;
      cp.lambda = q;
      cp.mu = e;
      cp.omega = t.m(1, 1, 1);
      expect("16", cp, t);
      step(swap_w());
      case14(transport(t, WitnessMatrix(*to_rational(swap_w()))));
    } else if (p.is_zero() && e.is_zero()) {
      route("17");
      CaseParams cp;
      cp.lambda = q;
      cp.omega = t.m(2, 2, 2);
      cp.mu = t.m(1, 1, 1);
      expect("17", cp, t);
      step(swap_w());
      case15(transport(t, WitnessMatrix(*to_rational(swap_w()))));
    } else {
      throw std::logic_error("classify: tuple matches no case of the second table");
    }
  }
};

void require_n2(const MatrixTuple& t) {
  if (t.n() != 2) throw Unsupported("classification implemented for n=2 only");
  if (!is_crisscross(t)) throw NotCrisscross();
}

void certify(const MatrixTuple& t, const Classification& c) {
  if (!check_witness(t, canonical_tuple(c.label), c.chain.composed()))
    throw std::logic_error("classify: witness chain for " + c.label.str() + " failed verification");
}

}  // namespace

Classification classify_by_tables(const MatrixTuple& t) {
  require_n2(t);
  Run run{t, {}};
  bool a = t.m(1, 2, 2).is_zero() && t.m(2, 1, 1).is_zero();
  if (a)
    run.branch_a(t);
  else
    run.branch_b(t);
  certify(t, run.c);
  return run.c;
}

Classification classify(const MatrixTuple& t) {
  require_n2(t);
  for (int k = 0; k <= 11; ++k) {
    auto label = ClassLabel::of(static_cast<LabelKind>(k));
    if (canonical_tuple(label) == t) {
      Classification c;
      c.label = label;
      c.route = {"canonical"};
      certify(t, c);
      return c;
    }
  }
  return classify_by_tables(t);
}

// ---- catalog

std::vector<CatalogEntry> witness_catalog() {
  std::vector<CatalogEntry> out;
  auto P = [](std::initializer_list<std::pair<const char*, R>> kv) {
    CaseParams p;
    for (const auto& [k, v] : kv) *p.slot(k) = v;
    return p;
  };
  auto C = [](const std::string& id, const CaseParams& p) { return instantiate_case(id, p); };
  auto B = [](LabelKind k) { return canonical_tuple(ClassLabel::of(k)); };
  const R la(2), mu(3), nu(5), om(7);

  out.push_back({"case 2 -> case 8", C("2", P({{"nu", nu}})), C("8", P({{"mu", mu}})), w_2_8(nu, mu)});
  out.push_back({"case 8 -> case 11", C("8", P({{"mu", mu}})), C("11", P({{"mu", mu}, {"nu", nu}})),
                 w_8_11(mu, nu)});
  out.push_back({"case 3 -> case 6", C("3", P({{"nu", nu}})), C("6", P({{"mu", mu}, {"nu", nu}})),
                 w_3_6(mu, nu)});
  out.push_back({"case 10 -> case 5", C("10", P({{"mu", mu}})), C("5", P({{"mu", mu}, {"nu", nu}})),
                 w_10_5(mu, nu)});
  out.push_back({"case 3 -> case 10", C("3", P({{"nu", nu}})), C("10", P({{"mu", mu}})), w_3_10(nu, mu)});
  out.push_back({"case 1 -> case 7", C("1", P({{"mu", mu}, {"lambda", la}})),
                 C("7", P({{"lambda", la}, {"mu", mu}})), swap_w()});
  out.push_back({"case 4 -> case 7", C("4", P({{"lambda", la}, {"mu", mu}})),
                 C("7", P({{"lambda", la}, {"mu", mu}})), w_4_7(la, mu)});
  out.push_back({"case 4 -> B4", C("4", P({{"lambda", la}, {"mu", mu}})), B(LabelKind::B4), w_4_b4(la, mu)});
  out.push_back({"case 1 (lambda=0) -> case 9", C("1", P({{"mu", mu}, {"lambda", 0}})),
                 C("9", P({{"nu", nu}})), w_1_9(mu, nu)});
  out.push_back({"case 4 (mu=0) -> case 4 (lambda=0)", C("4", P({{"lambda", la}, {"mu", 0}})),
                 C("4", P({{"lambda", 0}, {"mu", mu}})), w_4_4(la, mu)});
  out.push_back({"case 16 -> case 14", C("16", P({{"lambda", la}, {"mu", mu}, {"omega", om}})),
                 C("14", P({{"lambda", la}, {"mu", mu}, {"omega", om}})), swap_w()});
  out.push_back({"case 17 -> case 15", C("17", P({{"lambda", la}, {"mu", mu}, {"omega", om}})),
                 C("15", P({{"lambda", la}, {"mu", mu}, {"omega", om}})), swap_w()});
  out.push_back({"case 14.1 -> B5", C("14.1", P({{"lambda", la}, {"mu", mu}})), B(LabelKind::B5),
                 w_14_1(la, mu)});
  out.push_back({"case 14.2 -> B6", C("14.2", P({{"lambda", la}})), B(LabelKind::B6), w_14_2(la)});
  out.push_back({"case 14.3 -> B7", C("14.3", P({{"lambda", la}, {"mu", mu}})), B(LabelKind::B7),
                 w_14_3(la, mu)});
  out.push_back({"case 14.4 -> B8", C("14.4", P({{"lambda", la}, {"omega", om}})), B(LabelKind::B8),
                 w_14_4(la, om)});
  out.push_back({"case 14.5 -> B9", C("14.5", P({{"lambda", la}, {"mu", mu}, {"omega", om}})),
                 B(LabelKind::B9), w_14_5(la, mu, om)});
  // square roots rational at these parameters: sqrt(4*1*2 + 1) = 3, sqrt(1*1) = 1
  out.push_back({"case 15.1 -> B11", C("15.1", P({{"lambda", 2}, {"mu", 1}, {"omega", 1}})),
                 B(LabelKind::B11), w_15_1(2, 1, 1)});
  out.push_back({"case 15.2 -> B10", C("15.2", P({{"mu", 2}, {"omega", 1}})), B(LabelKind::B10),
                 w_15_2(2, 1)});
  out.push_back({"case 15.3 -> B6", C("15.3", P({{"lambda", la}})), B(LabelKind::B6), w_15_3(la)});
  out.push_back({"case 15.4 -> B11", C("15.4", P({{"lambda", 1}, {"omega", 1}})), B(LabelKind::B11),
                 w_15_4(1, 1)});
  out.push_back({"case 15.5 -> B8", C("15.5", P({{"lambda", la}, {"mu", mu}})), B(LabelKind::B8),
                 w_15_5(la, mu)});
  out.push_back({"case 13 -> B(s,t)", C("13", P({{"lambda", la}, {"mu", mu}, {"nu", nu}, {"omega", om}})),
                 canonical_tuple(ClassLabel::bst(la * mu / nu, om / mu)), w_13(mu, nu)});
  out.push_back({"B8 -> B(2,1/2)", B(LabelKind::B8), canonical_tuple(ClassLabel::bst(2, R(1, 2))),
                 w_b8_bs(2)});
  out.push_back({"B6 -> B(-1,-1)", B(LabelKind::B6), canonical_tuple(ClassLabel::bst(-1, -1)), w_b6_bm1()});
  out.push_back({"B9 -> B4", B(LabelKind::B9), B(LabelKind::B4), w_b9_b4()});
  out.push_back({"B11 -> B4", B(LabelKind::B11), B(LabelKind::B4), w_b11_b4()});
  out.push_back({"B7 -> B3", B(LabelKind::B7), B(LabelKind::B3), w_b7_b3()});
  out.push_back({"B10 -> B3", B(LabelKind::B10), B(LabelKind::B3), w_b10_b3()});
  out.push_back({"B8 -> B5", B(LabelKind::B8), B(LabelKind::B5), w_b8_b5()});
  return out;
}

// ---- decision

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "undecided";
  }
}

namespace {

// label -> (label used for comparison, witness canonical(label) ~ canonical(merged))
std::pair<ClassLabel, SurdMatrix> merge_label(const ClassLabel& l) {
  if (l.kind == LabelKind::B9) return {ClassLabel::of(LabelKind::B4), w_b9_b4()};
  if (l.kind == LabelKind::B11) return {ClassLabel::of(LabelKind::B4), w_b11_b4()};
  if (l.kind == LabelKind::B7) return {ClassLabel::of(LabelKind::B3), w_b7_b3()};
  if (l.kind == LabelKind::B10) return {ClassLabel::of(LabelKind::B3), w_b10_b3()};
  if (l.kind == LabelKind::B8) return {ClassLabel::of(LabelKind::B5), w_b8_b5()};
  return {l, SurdMatrix::identity(2)};
}

}  // namespace

IsoVerdict decide_isomorphism(const MatrixTuple& a, const MatrixTuple& b,
                              const std::optional<WitnessMatrix>& supplied) {
  if (a.n() != b.n()) throw DimensionMismatch("tuples differ in n");
  if (!is_crisscross(a) || !is_crisscross(b)) throw NotCrisscross();
  IsoVerdict v;
  v.report = {stacked_rank(a), stacked_rank(b), is_symmetric_tuple(a), is_symmetric_tuple(b)};
  if (supplied) {
    bool ok = check_witness(a, b, *supplied);
    v.supplied_witness_ok = ok;
    if (ok) {
      v.verdict = Verdict::Yes;
      v.witness = *supplied;
      v.reason = "supplied witness verified";
      return v;
    }
  }
  if (v.report.rank_a != v.report.rank_b) {
    v.verdict = Verdict::No;
    v.reason = "stacked_rank " + std::to_string(v.report.rank_a) + " vs " + std::to_string(v.report.rank_b);
    return v;
  }
  if (v.report.symmetric_a != v.report.symmetric_b) {
    v.verdict = Verdict::No;
    v.reason = std::string("symmetric ") + (v.report.symmetric_a ? "true" : "false") + " vs " +
               (v.report.symmetric_b ? "true" : "false");
    return v;
  }
  if (a == b) {
    v.verdict = Verdict::Yes;
    v.witness = WitnessMatrix::identity(a.n());
    v.reason = "identical tuples";
    return v;
  }
  if (a.n() != 2) {
    v.reason = "no witness search for n >= 3";
    return v;
  }
  Classification ca = classify(a), cb = classify(b);
  auto [la, wa] = merge_label(ca.label);
  auto [lb, wb] = merge_label(cb.label);
  if (!(la == lb)) {
    if (la.kind == LabelKind::Bst && lb.kind == LabelKind::Bst)
      v.reason = "classified as " + ca.label.str() + " and " + cb.label.str() +
                 "; isomorphism across B(s,t) parameters is not decided";
    else
      v.reason = "classified as " + ca.label.str() + " and " + cb.label.str() +
                 "; no stacked-rank or symmetry difference";
    return v;
  }
  SurdMatrix to_a = ca.chain.composed() * wa, to_b = cb.chain.composed() * wb;
  SurdMatrix w = to_a * inv(to_b);
  if (!check_witness(a, b, w)) throw std::logic_error("decide_isomorphism: composed witness failed");
  v.verdict = Verdict::Yes;
  if (auto r = to_rational(w)) {
    v.witness = WitnessMatrix(*r);
    v.reason = ca.label == cb.label ? "both classify to " + ca.label.str()
                                    : "classified as " + ca.label.str() + " and " + cb.label.str() + ", the same class";
  } else {
    v.extension_witness = w;
    Integer d;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (!w(i, j).is_rational()) d = w(i, j).radicand();
    v.reason = "isomorphic over Q(sqrt(" + d.get_str() + ")) via classification to " + ca.label.str();
  }
  return v;
}

}  // namespace dgfree
