#pragma once

#include <string>
#include <vector>

#include "astheno/calculus.hpp"
#include "astheno/fixtures.hpp"
#include "astheno/form.hpp"
#include "astheno/structure.hpp"

namespace astheno {

enum class Verdict { identically_zero, nonzero, conditionally_zero };
std::string_view to_string(Verdict v);

// p = 0, p = q or p = -q.
struct Relation {
  enum class Kind { zero, equal, opposite };
  Kind kind = Kind::zero;
  Param lhs = Param::alpha1;
  Param rhs = Param::alpha1;  // unused for zero

  static Relation zero(Param p) { return {Kind::zero, p, p}; }
  static Relation equal(Param p, Param q) { return {Kind::equal, p, q}; }
  static Relation opposite(Param p, Param q) { return {Kind::opposite, p, q}; }

  std::string text() const;  // "b1 = -b2"
  friend bool operator==(const Relation&, const Relation&) = default;
};

// a1 = 0, b1 = 0, a2 = 0, b2 = 0, b1 = b2, b1 = -b2, a1 = a2, a1 = -a2.
const std::vector<Relation>& candidate_relations();

// Parameter images under a set of relations (signed union-find; a class
// that is forced to equal its own negative collapses to 0).
std::array<Scalar, 4> relation_images(const std::vector<Relation>& relations);

struct ConditionOutcome {
  std::vector<Relation> relations;
  bool annihilates = false;
  // False when the relations force a parameter the structure requires to be
  // nonzero (alpha of an alpha-Sasakian factor, beta of a beta-Kenmotsu one).
  bool admissible = true;
  Form residual;  // residual after imposing the relations

  std::string text() const;  // "b1 = b2, a1 = 0"
};

// Tests every candidate relation touching a parameter of the residual, then
// the pairs of candidates that do not annihilate it on their own, keeping
// the pairs that do. Empty for a zero residual.
std::vector<ConditionOutcome> conditional_analysis(const Form& residual,
                                                   const ProductGeometry& geom);
std::vector<ConditionOutcome> conditional_analysis(const Form& residual,
                                                   const ProductGeometry& geom,
                                                   const StructureSpec& spec);

Form substitute(const Form& f, const StructureSpec& spec);
Form substitute(const Form& f, const StructureSpec& spec, const ProductGeometry& geom);

struct ClassificationReport {
  ConditionKind condition = ConditionKind::astheno;
  ProductGeometry geometry{1, 1};
  StructureSpec spec;
  LeibnizConvention convention = LeibnizConvention::graded;
  Form residual;
  Verdict verdict = Verdict::nonzero;
  std::vector<ConditionOutcome> conditions;
};

ClassificationReport classify(ConditionKind kind, const ProductGeometry& geom,
                              const StructureSpec& spec,
                              LeibnizConvention conv = LeibnizConvention::graded);
// Same, starting from an already computed condition tensor.
ClassificationReport classify_tensor(const Form& tensor, ConditionKind kind,
                                     const ProductGeometry& geom, const StructureSpec& spec,
                                     LeibnizConvention conv);

// How a printed table entry relates to the engine's expression.
enum class MatchClass { exact, modulo_truncation, modulo_convention, discrepancy };
std::string_view to_string(MatchClass m);

struct RowReport {
  int row = 0;
  StructureSpec spec;
  Form printed;           // fixture, as transcribed
  Form engine;            // untruncated, under the table's convention
  Form diff;              // printed - engine
  Form engine_truncated;  // truncated, under the table's convention
  MatchClass match = MatchClass::discrepancy;
  Verdict verdict = Verdict::nonzero;  // graded, truncated, symbolic parameters
  bool printed_zero = false;
  bool zero_agreement = false;
  bool flagged = false;
  std::string flag_reason;
};

struct TableReport {
  int id = 0;
  ProductGeometry geometry{1, 1};
  ConditionKind condition = ConditionKind::astheno;
  LeibnizConvention convention = LeibnizConvention::graded;
  std::vector<RowReport> rows;

  std::size_t count(MatchClass m) const;
  std::size_t zero_agreements() const;
  std::size_t flagged() const;
  // Every row matches exactly or within a tolerance class.
  bool passes() const { return count(MatchClass::discrepancy) == 0; }
};

// Throws std::out_of_range for an unknown table id.
TableReport reproduce_table(int id, LeibnizConvention conv);

struct ScanCell {
  unsigned m1 = 1;
  unsigned m2 = 1;
  StructureSpec spec;
  Verdict verdict = Verdict::nonzero;
  Form residual;
};

struct Proposition {
  std::string name;
  std::string statement;
  bool holds = true;
  bool vacuous = false;  // no scanned geometry is in scope
  std::vector<std::string> counterexamples;
};

struct ScanReport {
  unsigned max_m1 = 1;
  unsigned max_m2 = 1;
  ConditionKind condition = ConditionKind::astheno;
  LeibnizConvention convention = LeibnizConvention::graded;
  std::vector<ScanCell> cells;  // ordered by m1, m2, then table row order
  std::vector<Proposition> propositions;  // astheno only

  const ScanCell& cell(unsigned m1, unsigned m2, FactorType f1, FactorType f2) const;
};

// The nine table structure pairs, in table row order.
const std::vector<StructureSpec>& table_structure_pairs();

// Throws std::invalid_argument when a bound is 0.
ScanReport scan(unsigned max_m1, unsigned max_m2, ConditionKind kind,
                LeibnizConvention conv = LeibnizConvention::graded);

}  // namespace astheno
