#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dgfree/dgcore.hpp"
#include "dgfree/isomorph.hpp"

namespace dgfree {

// The 12 residuals of the n = 2 system, order (1.1)..(1.4), (2.1)..(2.4), (3.1)..(3.4).
std::vector<Rational> crisscross_equations_n2(const MatrixTuple& t);
extern const std::array<const char*, 12> kResidualNames;

struct CaseParams {
  std::optional<Rational> lambda, mu, nu, omega;

  std::optional<Rational>* slot(const std::string& name);
  const std::optional<Rational>* slot(const std::string& name) const;
  Rational get(const std::string& name) const;  // throws if unset
};

struct ParamSpec {
  std::string name;  // lambda, mu, nu, omega
  bool nonzero;
};

struct CaseFamily {
  std::string id;          // "1".."17", "14.1".."15.5"
  std::string parent;      // "14"/"15" for sub-cases
  std::vector<ParamSpec> params;
  std::string condition;   // sub-case condition as text, empty otherwise
  std::string target;      // class label the case reduces to ("B1", "B(s,t)", ...)
};

const std::vector<CaseFamily>& case_families();
const CaseFamily& case_family(const std::string& id);
// domain check incl. sub-case condition; fills parameters a sub-case fixes (14.3: omega = mu, ...)
bool admissible(const CaseFamily& f, CaseParams& p, std::string* why = nullptr);
MatrixTuple instantiate_case(const std::string& id, CaseParams p);

enum class LabelKind { B0, B1, B2, B3, B4, B5, B6, B7, B8, B9, B10, B11, Bst };

struct ClassLabel {
  LabelKind kind = LabelKind::B0;
  Rational s, t;  // only for Bst

  static ClassLabel of(LabelKind k) { return ClassLabel{k, Rational(0), Rational(0)}; }
  static ClassLabel bst(const Rational& s, const Rational& t) { return ClassLabel{LabelKind::Bst, s, t}; }
  static ClassLabel parse(const std::string& text);
  std::string str() const;  // "B7", "B(2,1/2)"
  friend bool operator==(const ClassLabel& a, const ClassLabel& b) {
    return a.kind == b.kind && (a.kind != LabelKind::Bst || (a.s == b.s && a.t == b.t));
  }
};

MatrixTuple canonical_tuple(const ClassLabel& label);

struct WitnessChain {
  int n = 2;
  std::vector<SurdMatrix> steps;
  SurdMatrix composed() const;  // product in chain order
  bool rational() const;
};

struct Classification {
  ClassLabel label;
  std::vector<std::string> route;  // case ids visited, e.g. {"16", "14", "14.3"}
  WitnessChain chain;
};

// Certified: the composed chain is checked against canonical_tuple(label).
Classification classify(const MatrixTuple& t);
// Same, without the exact-canonical-form shortcut (pure table dispatch).
Classification classify_by_tables(const MatrixTuple& t);

struct CatalogEntry {
  std::string name;  // e.g. "case 2 -> case 8"
  MatrixTuple source, target;
  SurdMatrix witness;
};
// Witnesses printed in the n = 2 classification proofs, at fixed parameters.
std::vector<CatalogEntry> witness_catalog();

enum class Verdict { Yes, No, Undecided };
const char* verdict_name(Verdict v);

struct InvariantReport {
  std::size_t rank_a = 0, rank_b = 0;
  bool symmetric_a = false, symmetric_b = false;
};

struct IsoVerdict {
  Verdict verdict = Verdict::Undecided;
  std::optional<WitnessMatrix> witness;        // rational witness
  std::optional<SurdMatrix> extension_witness; // only over Q(sqrt d)
  std::optional<bool> supplied_witness_ok;
  InvariantReport report;
  std::string reason;
};

IsoVerdict decide_isomorphism(const MatrixTuple& a, const MatrixTuple& b,
                              const std::optional<WitnessMatrix>& supplied = std::nullopt);

}  // namespace dgfree
