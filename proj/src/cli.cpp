#include "astheno/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "astheno/classify.hpp"
#include "astheno/expr_io.hpp"
#include "astheno/verify.hpp"

namespace astheno::cli {

namespace {

using nlohmann::json;

enum class Format { text, latex, json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "text";
  std::string convention = "graded";
  std::string truncation = "on";
  std::string ring_reduction = "on";
};

struct ParamFlags {
  std::array<std::string, 4> text;  // empty = not given

  ParamValues values() const {
    ParamValues v;
    for (Param p : kParams) {
      const auto& t = text[slot(p)];
      if (t.empty()) continue;
      Form f;
      try {
        f = parse(t);
      } catch (const ParseError& e) {
        throw UsageError("--" + std::string(param_name(p)) + ": " + e.what());
      }
      std::optional<Rational> c;
      if (f.is_scalar()) c = f.coefficient(Monomial{}).as_constant();
      if (!c) throw UsageError("--" + std::string(param_name(p)) + " must be a rational number");
      v[slot(p)] = *c;
    }
    return v;
  }
};

bool color_enabled() {
  const char* v = std::getenv("ASTHENO_COLOR");
  return v != nullptr && std::string_view(v) == "on";
}

class Printer {
 public:
  Printer(Format f, bool color) : format_(f), color_(color && f != Format::json) {}

  std::string form(const Form& f) const {
    return format_ == Format::latex ? print_latex(f) : print_text(f);
  }
  std::string paint(std::string_view word, bool good) const {
    if (!color_) return std::string(word);
    return std::string(good ? "\x1b[32m" : "\x1b[31m") + std::string(word) + "\x1b[0m";
  }
  Format format() const { return format_; }

 private:
  Format format_;
  bool color_;
};

Format parse_format(const std::string& s) {
  if (s == "latex") return Format::latex;
  if (s == "json") return Format::json;
  return Format::text;
}

bool on(const std::string& s) { return s == "on"; }

json form_json(const Form& f) { return {{"text", print_text(f)}, {"record", to_record(f)}}; }

json geometry_json(const ProductGeometry& g) {
  return {{"m1", g.m1()},
          {"m2", g.m2()},
          {"m", g.m()},
          {"real_dim1", g.real_dim1()},
          {"real_dim2", g.real_dim2()},
          {"truncate", g.truncate()},
          {"ring_reduction", g.reduce_ring()}};
}

std::string geometry_text(const ProductGeometry& g) {
  std::ostringstream s;
  s << "m1=" << g.m1() << " m2=" << g.m2() << " (real dims " << g.real_dim1() << " x "
    << g.real_dim2() << ", complex dim " << g.m() << ")";
  return s.str();
}

json outcome_json(const ConditionOutcome& o) {
  return {{"relations", o.text()},
          {"annihilates", o.annihilates},
          {"admissible", o.admissible},
          {"residual", form_json(o.residual)}};
}

// ---------------------------------------------------------------- check

int cmd_check(const Common& c, unsigned m1, unsigned m2, const std::string& f1,
              const std::string& f2, const std::string& cond, const ParamFlags& params,
              const Printer& pr, std::ostream& out) {
  const ProductGeometry geom(m1, m2, on(c.truncation), on(c.ring_reduction));
  StructureSpec spec{{*parse_factor_type(f1), {}, {}}, {*parse_factor_type(f2), {}, {}}};
  const ParamValues v = params.values();
  spec.factor1.alpha = v[slot(Param::alpha1)];
  spec.factor1.beta = v[slot(Param::beta1)];
  spec.factor2.alpha = v[slot(Param::alpha2)];
  spec.factor2.beta = v[slot(Param::beta2)];
  const auto report =
      classify(*parse_condition(cond), geom, spec, *parse_convention(c.convention));
  const bool zero = report.verdict == Verdict::identically_zero;

  if (pr.format() == Format::json) {
    json conditions = json::array();
    for (const auto& o : report.conditions) conditions.push_back(outcome_json(o));
    out << json{{"command", "check"},
                {"condition", to_string(report.condition)},
                {"geometry", geometry_json(geom)},
                {"structure", {{"factor1", to_string(spec.factor1.type)},
                               {"factor2", to_string(spec.factor2.type)}}},
                {"convention", to_string(report.convention)},
                {"residual", form_json(report.residual)},
                {"verdict", to_string(report.verdict)},
                {"conditions", conditions}}
               .dump(2)
        << "\n";
  } else {
    out << "condition:  " << to_string(report.condition) << "\n"
        << "geometry:   " << geometry_text(geom) << "\n"
        << "structure:  " << spec.label() << "\n"
        << "convention: " << to_string(report.convention) << "\n"
        << "truncation: " << c.truncation << ", ring reduction: " << c.ring_reduction << "\n"
        << "residual:   " << pr.form(report.residual) << "\n"
        << "verdict:    " << pr.paint(to_string(report.verdict), zero) << "\n";
    if (!report.conditions.empty()) {
      out << "conditions:\n";
      for (const auto& o : report.conditions) {
        out << "  " << o.text() << ": " << (o.annihilates ? "annihilates" : "does not annihilate")
            << (o.admissible ? "" : " (forces a structure parameter to 0)") << "\n";
      }
    }
  }
  return zero ? kExitOk : kExitNonzero;
}

// ---------------------------------------------------------------- table

int cmd_table(const Common& c, int id, const Printer& pr, std::ostream& out) {
  if (id < 1 || id > 10) throw UsageError("--id must be between 1 and 10");
  const auto t = reproduce_table(id, *parse_convention(c.convention));
  if (pr.format() == Format::json) {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json j{{"row", r.row},
             {"structure", r.spec.label()},
             {"printed", form_json(r.printed)},
             {"engine", form_json(r.engine)},
             {"diff", form_json(r.diff)},
             {"engine_truncated", form_json(r.engine_truncated)},
             {"match", to_string(r.match)},
             {"verdict", to_string(r.verdict)},
             {"printed_zero", r.printed_zero},
             {"zero_agreement", r.zero_agreement},
             {"flagged", r.flagged}};
      if (r.flagged) j["flag_reason"] = r.flag_reason;
      rows.push_back(std::move(j));
    }
    out << json{{"command", "table"},
                {"table", t.id},
                {"geometry", geometry_json(t.geometry)},
                {"condition", to_string(t.condition)},
                {"convention", to_string(t.convention)},
                {"rows", rows},
                {"summary",
                 {{"exact", t.count(MatchClass::exact)},
                  {"modulo_truncation", t.count(MatchClass::modulo_truncation)},
                  {"modulo_convention", t.count(MatchClass::modulo_convention)},
                  {"discrepancy", t.count(MatchClass::discrepancy)},
                  {"zero_agreement", t.zero_agreements()},
                  {"flagged", t.flagged()}}},
                {"passes", t.passes()}}
               .dump(2)
        << "\n";
  } else {
    out << "table " << t.id << ": " << geometry_text(t.geometry) << ", "
        << to_string(t.condition) << ", " << to_string(t.convention) << "\n";
    for (const auto& r : t.rows) {
      out << "row " << r.row << "  " << r.spec.label() << "\n"
          << "  printed:   " << pr.form(r.printed) << "\n"
          << "  engine:    " << pr.form(r.engine) << "\n"
          << "  truncated: " << pr.form(r.engine_truncated) << "\n"
          << "  match:     " << pr.paint(to_string(r.match), r.match != MatchClass::discrepancy)
          << "\n";
      if (r.match == MatchClass::discrepancy) out << "  diff:      " << pr.form(r.diff) << "\n";
      out << "  verdict:   " << to_string(r.verdict)
          << (r.zero_agreement ? " (agrees with print)" : " (disagrees with print)") << "\n";
      if (r.flagged) out << "  flagged:   " << r.flag_reason << "\n";
    }
    out << "summary: " << t.count(MatchClass::exact) << " exact, "
        << t.count(MatchClass::modulo_truncation) << " modulo truncation, "
        << t.count(MatchClass::modulo_convention) << " modulo convention, "
        << t.count(MatchClass::discrepancy) << " discrepancies; " << t.zero_agreements()
        << "/9 zero agreements; " << t.flagged() << " flagged\n";
  }
  return t.passes() ? kExitOk : kExitNonzero;
}

// ---------------------------------------------------------------- scan

char verdict_mark(Verdict v) {
  switch (v) {
    case Verdict::identically_zero: return '0';
    case Verdict::nonzero: return 'x';
    case Verdict::conditionally_zero: return '?';
  }
  return ' ';
}

int cmd_scan(const Common& c, unsigned max_m1, unsigned max_m2, const std::string& cond,
             const Printer& pr, std::ostream& out) {
  if (max_m1 == 0 || max_m2 == 0) throw UsageError("scan bounds must be >= 1");
  const auto r = scan(max_m1, max_m2, *parse_condition(cond), *parse_convention(c.convention));
  bool ok = true;
  for (const auto& p : r.propositions) ok = ok && p.holds;

  if (pr.format() == Format::json) {
    json cells = json::array();
    for (const auto& cell : r.cells) {
      cells.push_back({{"m1", cell.m1},
                       {"m2", cell.m2},
                       {"factor1", to_string(cell.spec.factor1.type)},
                       {"factor2", to_string(cell.spec.factor2.type)},
                       {"verdict", to_string(cell.verdict)},
                       {"residual", form_json(cell.residual)}});
    }
    json props = json::array();
    for (const auto& p : r.propositions) {
      props.push_back({{"name", p.name},
                       {"statement", p.statement},
                       {"holds", p.holds},
                       {"vacuous", p.vacuous},
                       {"counterexamples", p.counterexamples}});
    }
    out << json{{"command", "scan"},
                {"max_m1", r.max_m1},
                {"max_m2", r.max_m2},
                {"condition", to_string(r.condition)},
                {"convention", to_string(r.convention)},
                {"cells", cells},
                {"propositions", props}}
               .dump(2)
        << "\n";
  } else {
    out << "scan " << to_string(r.condition) << ", " << to_string(r.convention)
        << ", m1 <= " << r.max_m1 << ", m2 <= " << r.max_m2
        << "   (0 identically zero, x nonzero, ? conditionally zero)\n";
    out << "structure                          ";
    for (unsigned m1 = 1; m1 <= r.max_m1; ++m1) {
      for (unsigned m2 = 1; m2 <= r.max_m2; ++m2) out << " " << m1 << "," << m2;
    }
    out << "\n";
    for (const auto& spec : table_structure_pairs()) {
      std::string label = spec.label();
      label.resize(std::max<std::size_t>(label.size(), 34), ' ');
      out << label;
      for (unsigned m1 = 1; m1 <= r.max_m1; ++m1) {
        for (unsigned m2 = 1; m2 <= r.max_m2; ++m2) {
          const auto& cell = r.cell(m1, m2, spec.factor1.type, spec.factor2.type);
          out << "   " << verdict_mark(cell.verdict);
        }
      }
      out << "\n";
    }
    for (const auto& p : r.propositions) {
      out << "[" << pr.paint(p.vacuous ? "vacuous" : (p.holds ? "holds" : "fails"), p.holds)
          << "] " << p.statement << "\n";
      for (const auto& ce : p.counterexamples) out << "    counterexample: " << ce << "\n";
    }
  }
  return ok ? kExitOk : kExitNonzero;
}

// ---------------------------------------------------------------- verify-paper

int cmd_verify(const Printer& pr, std::ostream& out) {
  const auto r = verify_paper();
  if (pr.format() == Format::json) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"id", c.id},
                        {"kind", c.invariant ? "invariant" : "printed"},
                        {"status", to_string(c.status)},
                        {"summary", c.summary},
                        {"details", c.details}});
    }
    out << json{{"command", "verify-paper"},
                {"checks", checks},
                {"summary",
                 {{"pass", r.count(CheckStatus::pass)},
                  {"fail", r.count(CheckStatus::fail)},
                  {"finding", r.count(CheckStatus::finding)}}},
                {"passed", r.passed()}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& c : r.checks) {
      out << "[" << pr.paint(to_string(c.status), c.status == CheckStatus::pass) << "] " << c.id
          << ": " << c.summary << "\n";
      if (c.id == "printed.kenmotsu_pair_conditions") {
        for (const auto& k : c.details["cases"]) {
          out << "    table " << k["table"].get<int>() << " " << k["convention"].get<std::string>()
              << ": residual " << k["residual"]["text"].get<std::string>()
              << "; annihilating sets:";
          if (k["annihilating_sets"].empty()) out << " none";
          for (const auto& s : k["annihilating_sets"]) out << " {" << s.get<std::string>() << "}";
          out << "\n";
        }
      }
      if (c.id == "printed.zero_rows") {
        for (const auto& f : c.details["flagged"]) {
          out << "    table " << f["table"].get<int>() << " row " << f["row"].get<int>() << ": "
              << f["reason"].get<std::string>() << "\n";
        }
      }
      if (c.id.rfind("printed.table", 0) == 0 && c.status == CheckStatus::finding) {
        for (const auto& row : c.details["rows"]) {
          if (row["match"] != "discrepancy") continue;
          out << "    row " << row["row"].get<int>() << " (" << row["structure"].get<std::string>()
              << "): diff " << row["diff"]["text"].get<std::string>() << "\n";
        }
      }
    }
    out << "summary: " << r.count(CheckStatus::pass) << " pass, " << r.count(CheckStatus::fail)
        << " fail, " << r.count(CheckStatus::finding) << " findings\n";
  }
  return r.passed() ? kExitOk : kExitNonzero;
}

// ---------------------------------------------------------------- eval

int cmd_eval(const Common& c, const std::string& expr, const std::vector<std::string>& apply,
             std::optional<unsigned> m1, std::optional<unsigned> m2, const ParamFlags& params,
             const Printer& pr, std::ostream& out) {
  if (m1.has_value() != m2.has_value()) throw UsageError("--m1 and --m2 go together");
  // Without a geometry the algebra is untruncated; m1 = m2 = 1 is a placeholder.
  const ProductGeometry geom = m1 ? ProductGeometry(*m1, *m2, on(c.truncation), on(c.ring_reduction))
                                  : ProductGeometry(1, 1, false, on(c.ring_reduction));
  const auto conv = *parse_convention(c.convention);
  Form f = canonicalize(parse(expr), geom);
  for (const auto& op : apply) {
    if (op == "d") {
      f = exterior_d(f, conv, geom);
    } else if (op == "dc") {
      f = d_c(f, conv, geom);
    } else if (op == "j") {
      f = canonicalize(j_action(f), geom);
    }
  }
  const ParamValues values = params.values();
  f = canonicalize(f.map_coefficients([&](const Scalar& s) { return s.substitute(values); }), geom);

  if (pr.format() == Format::json) {
    json j{{"command", "eval"},
           {"expr", expr},
           {"apply", apply},
           {"convention", to_string(conv)},
           {"result", form_json(f)}};
    if (m1) j["geometry"] = geometry_json(geom);
    out << j.dump(2) << "\n";
  } else {
    out << pr.form(f) << "\n";
  }
  return kExitOk;
}

void add_common(CLI::App* sub, Common& c, bool with_algebra_flags) {
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "latex", "json"}))
      ->capture_default_str();
  if (!with_algebra_flags) return;
  sub->add_option("--convention", c.convention, "Leibniz convention")
      ->check(CLI::IsMember({"graded", "ungraded"}))
      ->capture_default_str();
  sub->add_option("--truncation", c.truncation, "drop Phi_i^p for p > m_i")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  sub->add_option("--ring-reduction", c.ring_reduction, "impose a1*b1 = a2*b2 = 0")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
}

void add_params(CLI::App* sub, ParamFlags& p) {
  for (Param q : kParams) {
    const std::string name(param_name(q));
    sub->add_option("--" + name, p.text[slot(q)], "value of " + name + " (p/q)");
  }
}

std::vector<std::string> factor_names() {
  return {"alpha-sasakian", "sasakian", "beta-kenmotsu", "kenmotsu", "cosymplectic",
          "trans-sasakian"};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exterior calculus on products of almost-contact metric manifolds"};
  app.name("astheno");
  app.require_subcommand(1);

  Common common;
  ParamFlags params;

  unsigned m1 = 0, m2 = 0;
  std::string factor1, factor2, condition = "astheno";
  auto* check = app.add_subcommand("check", "classify one structure pair");
  add_common(check, common, true);
  check->add_option("--m1", m1, "half-dimension of the first factor")->required();
  check->add_option("--m2", m2, "half-dimension of the second factor")->required();
  check->add_option("--factor1", factor1)->required()->check(CLI::IsMember(factor_names()));
  check->add_option("--factor2", factor2)->required()->check(CLI::IsMember(factor_names()));
  check->add_option("--condition", condition)
      ->check(CLI::IsMember({"astheno", "skt", "gauduchon"}))
      ->capture_default_str();
  add_params(check, params);

  int table_id = 0;
  auto* table = app.add_subcommand("table", "reproduce one of the ten case tables");
  add_common(table, common, false);
  table->add_option("--convention", common.convention)
      ->check(CLI::IsMember({"graded", "ungraded"}))
      ->capture_default_str();
  table->add_option("--id", table_id, "table number 1-10")->required();

  unsigned max_m1 = 3, max_m2 = 3;
  auto* scan_cmd = app.add_subcommand("scan", "classify all structure pairs over a range");
  add_common(scan_cmd, common, false);
  scan_cmd->add_option("--convention", common.convention)
      ->check(CLI::IsMember({"graded", "ungraded"}))
      ->capture_default_str();
  scan_cmd->add_option("--max-m1", max_m1)->capture_default_str();
  scan_cmd->add_option("--max-m2", max_m2)->capture_default_str();
  scan_cmd->add_option("--condition", condition)
      ->check(CLI::IsMember({"astheno", "skt", "gauduchon"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify-paper", "run all invariant checks and audits of the printed results");
  add_common(verify, common, false);

  std::string expr;
  std::vector<std::string> apply;
  std::optional<unsigned> eval_m1, eval_m2;
  auto* eval = app.add_subcommand("eval", "parse an expression and apply operators");
  add_common(eval, common, true);
  eval->add_option("--expr", expr, "expression in the text grammar")->required();
  eval->add_option("--apply", apply, "operator chain, left to right")
      ->check(CLI::IsMember({"none", "d", "dc", "j"}))
      ->take_all();
  eval->add_option("--m1", eval_m1);
  eval->add_option("--m2", eval_m2);
  add_params(eval, params);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Printer pr(parse_format(common.format), color_enabled());
  try {
    if (*check) return cmd_check(common, m1, m2, factor1, factor2, condition, params, pr, out);
    if (*table) return cmd_table(common, table_id, pr, out);
    if (*scan_cmd) return cmd_scan(common, max_m1, max_m2, condition, pr, out);
    if (*verify) return cmd_verify(pr, out);
    if (*eval) return cmd_eval(common, expr, apply, eval_m1, eval_m2, params, pr, out);
  } catch (const ParseError& e) {
    err << "parse error at " << e.position().line << ":" << e.position().column << ": "
        << e.message() << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    err << "invalid geometry: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const SpecError& e) {
    err << "invalid structure: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace astheno::cli
