#include "astheno/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace astheno {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::identically_zero: return "identically-zero";
    case Verdict::nonzero: return "nonzero";
    case Verdict::conditionally_zero: return "conditionally-zero";
  }
  return "?";
}

std::string_view to_string(MatchClass m) {
  switch (m) {
    case MatchClass::exact: return "exact";
    case MatchClass::modulo_truncation: return "modulo-truncation";
    case MatchClass::modulo_convention: return "modulo-convention";
    case MatchClass::discrepancy: return "discrepancy";
  }
  return "?";
}

std::string Relation::text() const {
  const std::string l(param_name(lhs));
  switch (kind) {
    case Kind::zero: return l + " = 0";
    case Kind::equal: return l + " = " + std::string(param_name(rhs));
    case Kind::opposite: return l + " = -" + std::string(param_name(rhs));
  }
  return l;
}

std::string ConditionOutcome::text() const {
  std::string out;
  for (const auto& r : relations) {
    if (!out.empty()) out += ", ";
    out += r.text();
  }
  return out;
}

const std::vector<Relation>& candidate_relations() {
  static const std::vector<Relation> list{
      Relation::zero(Param::alpha1),
      Relation::zero(Param::beta1),
      Relation::zero(Param::alpha2),
      Relation::zero(Param::beta2),
      Relation::equal(Param::beta1, Param::beta2),
      Relation::opposite(Param::beta1, Param::beta2),
      Relation::equal(Param::alpha1, Param::alpha2),
      Relation::opposite(Param::alpha1, Param::alpha2),
  };
  return list;
}

namespace {

// Union-find over the four parameters plus a node standing for 0; each node
// stores its sign relative to its parent.
class SignedClasses {
 public:
  static constexpr int kZero = 4;

  SignedClasses() {
    for (int i = 0; i < 5; ++i) parent_[i] = i;
  }

  // x = sign * root
  std::pair<int, int> find(int x) {
    if (parent_[x] == x) return {x, 1};
    auto [root, s] = find(parent_[x]);
    parent_[x] = root;
    sign_[x] *= s;
    return {root, sign_[x]};
  }

  // Imposes x = sign * y.
  void join(int x, int y, int sign) {
    auto [rx, sx] = find(x);
    auto [ry, sy] = find(y);
    if (rx == ry) {
      // p = -p over the rationals means p = 0.
      if (sx != sign * sy && rx != kZero) attach(rx, kZero, 1);
      return;
    }
    // rx = sx * x = sx * sign * y = sx * sign * sy * ry
    const int s = sx * sign * sy;
    if (rx == kZero || (ry != kZero && rx < ry)) {
      attach(ry, rx, s);
    } else {
      attach(rx, ry, s);
    }
  }

 private:
  void attach(int child, int root, int sign) {
    parent_[child] = root;
    sign_[child] = sign;
  }

  std::array<int, 5> parent_{};
  std::array<int, 5> sign_{1, 1, 1, 1, 1};
};

bool touches(const Relation& r, const Form& f) {
  for (const auto& [m, s] : f.terms()) {
    if (s.involves(r.lhs) || (r.kind != Relation::Kind::zero && s.involves(r.rhs))) return true;
  }
  return false;
}

std::vector<Param> required_nonzero(const StructureSpec& spec) {
  std::vector<Param> out;
  auto add = [&](const FactorSpec& f, Param alpha, Param beta) {
    if (f.type == FactorType::alpha_sasakian) out.push_back(alpha);
    if (f.type == FactorType::beta_kenmotsu) out.push_back(beta);
  };
  add(spec.factor1, Param::alpha1, Param::beta1);
  add(spec.factor2, Param::alpha2, Param::beta2);
  return out;
}

ConditionOutcome evaluate(const Form& residual, const ProductGeometry& geom,
                          std::vector<Relation> relations, const std::vector<Param>& required) {
  ConditionOutcome o;
  o.relations = std::move(relations);
  const auto images = relation_images(o.relations);
  o.residual = canonicalize(
      residual.map_coefficients([&](const Scalar& s) { return s.compose(images); }), geom);
  o.annihilates = o.residual.is_zero();
  for (Param p : required) o.admissible = o.admissible && !images[slot(p)].is_zero();
  return o;
}

std::vector<ConditionOutcome> analyse(const Form& residual, const ProductGeometry& geom,
                                      const std::vector<Param>& required) {
  std::vector<ConditionOutcome> out;
  if (residual.is_zero()) return out;
  std::vector<Relation> open;
  for (const auto& r : candidate_relations()) {
    if (!touches(r, residual)) continue;
    out.push_back(evaluate(residual, geom, {r}, required));
    if (!out.back().annihilates) open.push_back(r);
  }
  // Pairs with the same effect on the parameters (b1 = 0 with b1 = b2, say,
  // and b1 = 0 with b2 = 0) are reported once.
  std::vector<std::array<Scalar, 4>> seen;
  for (std::size_t i = 0; i < open.size(); ++i) {
    for (std::size_t j = i + 1; j < open.size(); ++j) {
      const auto images = relation_images({open[i], open[j]});
      if (std::find(seen.begin(), seen.end(), images) != seen.end()) continue;
      seen.push_back(images);
      auto o = evaluate(residual, geom, {open[i], open[j]}, required);
      if (o.annihilates) out.push_back(std::move(o));
    }
  }
  return out;
}

}  // namespace

std::array<Scalar, 4> relation_images(const std::vector<Relation>& relations) {
  SignedClasses classes;
  for (const auto& r : relations) {
    const int l = static_cast<int>(slot(r.lhs));
    switch (r.kind) {
      case Relation::Kind::zero: classes.join(l, SignedClasses::kZero, 1); break;
      case Relation::Kind::equal: classes.join(l, static_cast<int>(slot(r.rhs)), 1); break;
      case Relation::Kind::opposite: classes.join(l, static_cast<int>(slot(r.rhs)), -1); break;
    }
  }
  std::array<Scalar, 4> images;
  for (Param p : kParams) {
    auto [root, sign] = classes.find(static_cast<int>(slot(p)));
    if (root == SignedClasses::kZero) continue;
    images[slot(p)] = Scalar(sign) * Scalar::parameter(static_cast<Param>(root));
  }
  return images;
}

std::vector<ConditionOutcome> conditional_analysis(const Form& residual,
                                                   const ProductGeometry& geom) {
  return analyse(residual, geom, {});
}

std::vector<ConditionOutcome> conditional_analysis(const Form& residual,
                                                   const ProductGeometry& geom,
                                                   const StructureSpec& spec) {
  return analyse(residual, geom, required_nonzero(spec));
}

Form substitute(const Form& f, const StructureSpec& spec) {
  const ParamValues values = spec.values();
  return f.map_coefficients([&](const Scalar& s) { return s.substitute(values); });
}

Form substitute(const Form& f, const StructureSpec& spec, const ProductGeometry& geom) {
  return canonicalize(substitute(f, spec), geom);
}

ClassificationReport classify_tensor(const Form& tensor, ConditionKind kind,
                                     const ProductGeometry& geom, const StructureSpec& spec,
                                     LeibnizConvention conv) {
  spec.validate(geom.reduce_ring());
  ClassificationReport r;
  r.condition = kind;
  r.geometry = geom;
  r.spec = spec;
  r.convention = conv;
  r.residual = substitute(tensor, spec, geom);
  if (r.residual.is_zero()) {
    r.verdict = Verdict::identically_zero;
    return r;
  }
  r.verdict = Verdict::nonzero;
  r.conditions = conditional_analysis(r.residual, geom, spec);
  for (const auto& c : r.conditions) {
    if (c.annihilates && c.admissible) r.verdict = Verdict::conditionally_zero;
  }
  return r;
}

ClassificationReport classify(ConditionKind kind, const ProductGeometry& geom,
                              const StructureSpec& spec, LeibnizConvention conv) {
  spec.validate(geom.reduce_ring());
  return classify_tensor(condition_tensor(kind, geom, conv), kind, geom, spec, conv);
}

std::size_t TableReport::count(MatchClass m) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const RowReport& r) { return r.match == m; }));
}

std::size_t TableReport::zero_agreements() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const RowReport& r) { return r.zero_agreement; }));
}

std::size_t TableReport::flagged() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const RowReport& r) { return r.flagged; }));
}

TableReport reproduce_table(int id, LeibnizConvention conv) {
  const TableFixture& fx = embedded_fixtures().table(id);
  const ProductGeometry truncated(fx.m1, fx.m2, true, true);
  const ProductGeometry free = truncated.with_truncation(false);

  const Form tensor_free = condition_tensor(fx.condition, free, conv);
  const Form tensor_truncated = condition_tensor(fx.condition, truncated, conv);
  const Form graded_truncated =
      conv == LeibnizConvention::graded
          ? tensor_truncated
          : condition_tensor(fx.condition, truncated, LeibnizConvention::graded);
  const Form other_free =
      conv == LeibnizConvention::graded
          ? condition_tensor(fx.condition, free, LeibnizConvention::ungraded)
          : Form();

  TableReport report;
  report.id = id;
  report.geometry = truncated;
  report.condition = fx.condition;
  report.convention = conv;
  for (const auto& row : fx.rows) {
    RowReport r;
    r.row = row.row;
    r.spec = row.spec();
    r.printed = row.printed.form;
    r.engine = substitute(tensor_free, r.spec, free);
    r.diff = r.printed - r.engine;
    r.engine_truncated = substitute(tensor_truncated, r.spec, truncated);

    if (r.diff.is_zero()) {
      r.match = MatchClass::exact;
    } else if (truncate(r.diff, truncated).is_zero()) {
      r.match = MatchClass::modulo_truncation;
    } else if (conv == LeibnizConvention::graded &&
               truncate(r.printed - substitute(other_free, r.spec, free), truncated).is_zero()) {
      r.match = MatchClass::modulo_convention;
    } else {
      r.match = MatchClass::discrepancy;
    }

    r.verdict = classify_tensor(graded_truncated, fx.condition, truncated, r.spec,
                                LeibnizConvention::graded)
                    .verdict;
    r.printed_zero = row.printed_zero();
    const bool engine_zero = r.verdict == Verdict::identically_zero;
    r.zero_agreement = engine_zero == r.printed_zero;
    if (r.printed_zero && !engine_zero) {
      r.flagged = true;
      r.flag_reason = "printed 0 but the graded truncated residual is nonzero";
    } else if (!r.printed_zero && engine_zero) {
      r.flagged = true;
      r.flag_reason = "printed nonzero but the graded truncated residual vanishes";
    } else if (!r.printed_zero && truncate(r.printed, truncated).is_zero()) {
      r.flagged = true;
      r.flag_reason = "printed expression vanishes under truncation";
    }
    report.rows.push_back(std::move(r));
  }
  return report;
}

const std::vector<StructureSpec>& table_structure_pairs() {
  using F = FactorType;
  static const std::vector<StructureSpec> pairs{
      StructureSpec::of(F::alpha_sasakian, F::alpha_sasakian),
      StructureSpec::of(F::alpha_sasakian, F::beta_kenmotsu),
      StructureSpec::of(F::alpha_sasakian, F::cosymplectic),
      StructureSpec::of(F::beta_kenmotsu, F::beta_kenmotsu),
      StructureSpec::of(F::beta_kenmotsu, F::alpha_sasakian),
      StructureSpec::of(F::beta_kenmotsu, F::cosymplectic),
      StructureSpec::of(F::cosymplectic, F::alpha_sasakian),
      StructureSpec::of(F::cosymplectic, F::beta_kenmotsu),
      StructureSpec::of(F::cosymplectic, F::cosymplectic),
  };
  return pairs;
}

const ScanCell& ScanReport::cell(unsigned m1, unsigned m2, FactorType f1, FactorType f2) const {
  for (const auto& c : cells) {
    if (c.m1 == m1 && c.m2 == m2 && c.spec.factor1.type == f1 && c.spec.factor2.type == f2) {
      return c;
    }
  }
  throw std::out_of_range("no such scan cell");
}

namespace {

std::string cell_name(const ScanCell& c) {
  return c.spec.label() + " at m1=" + std::to_string(c.m1) + ", m2=" + std::to_string(c.m2);
}

bool is_pair(const StructureSpec& s, FactorType f1, FactorType f2) {
  return s.factor1.type == f1 && s.factor2.type == f2;
}

Proposition only_cosymplectic(const ScanReport& r) {
  Proposition p;
  p.name = "both-factors-large";
  p.statement = "for m1, m2 >= 2 only cosymplectic x cosymplectic is identically zero";
  p.vacuous = true;
  for (const auto& c : r.cells) {
    if (c.m1 < 2 || c.m2 < 2) continue;
    p.vacuous = false;
    const bool cc = is_pair(c.spec, FactorType::cosymplectic, FactorType::cosymplectic);
    const bool zero = c.verdict == Verdict::identically_zero;
    if (zero != cc) p.counterexamples.push_back(cell_name(c) + ": " + std::string(to_string(c.verdict)));
  }
  p.holds = p.counterexamples.empty();
  return p;
}

// Sasakian x cosymplectic (or its mirror) vanishes exactly when the
// Sasakian factor is 3-dimensional.
Proposition sasakian_three(const ScanReport& r, bool first) {
  Proposition p;
  const FactorType f1 = first ? FactorType::alpha_sasakian : FactorType::cosymplectic;
  const FactorType f2 = first ? FactorType::cosymplectic : FactorType::alpha_sasakian;
  p.name = first ? "sasakian-cosymplectic" : "cosymplectic-sasakian";
  p.statement = std::string(to_string(f1)) + " x " + std::string(to_string(f2)) +
                " is identically zero exactly when " + (first ? "m1" : "m2") + " = 1";
  p.vacuous = r.cells.empty();
  for (const auto& c : r.cells) {
    if (!is_pair(c.spec, f1, f2)) continue;
    const bool three = (first ? c.m1 : c.m2) == 1;
    const bool zero = c.verdict == Verdict::identically_zero;
    if (zero != three) p.counterexamples.push_back(cell_name(c) + ": " + std::string(to_string(c.verdict)));
  }
  p.holds = p.counterexamples.empty();
  return p;
}

}  // namespace

ScanReport scan(unsigned max_m1, unsigned max_m2, ConditionKind kind, LeibnizConvention conv) {
  if (max_m1 == 0 || max_m2 == 0) throw std::invalid_argument("scan bounds must be >= 1");
  ScanReport r;
  r.max_m1 = max_m1;
  r.max_m2 = max_m2;
  r.condition = kind;
  r.convention = conv;
  for (unsigned m1 = 1; m1 <= max_m1; ++m1) {
    for (unsigned m2 = 1; m2 <= max_m2; ++m2) {
      const ProductGeometry geom(m1, m2);
      const Form tensor = condition_tensor(kind, geom, conv);
      for (const auto& spec : table_structure_pairs()) {
        auto report = classify_tensor(tensor, kind, geom, spec, conv);
        r.cells.push_back({m1, m2, spec, report.verdict, std::move(report.residual)});
      }
    }
  }
  if (kind == ConditionKind::astheno) {
    r.propositions.push_back(only_cosymplectic(r));
    r.propositions.push_back(sasakian_three(r, true));
    r.propositions.push_back(sasakian_three(r, false));
  }
  return r;
}

}  // namespace astheno
