#include "astheno/fixtures.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "astheno/expr_io.hpp"

namespace astheno {

namespace detail {
extern const char* const kFixtureJson;
}

const EquationFixture& FixtureSet::equation(std::string_view id) const {
  for (const auto& e : equations) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("no equation fixture '" + std::string(id) + "'");
}

const TableFixture& FixtureSet::table(int id) const {
  for (const auto& t : tables) {
    if (t.id == id) return t;
  }
  throw std::out_of_range("no table fixture " + std::to_string(id));
}

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FixtureError(where + ": missing '" + key + "'");
  return *it;
}

std::string text_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) throw FixtureError(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

PrintedExpression printed(const json& obj, const std::string& where) {
  PrintedExpression p;
  p.latex = text_field(obj, "latex", where);
  p.source = text_field(obj, "source", where);
  if (auto it = obj.find("note"); it != obj.end()) p.note = it->get<std::string>();
  Form parsed;
  try {
    parsed = parse(p.source);
  } catch (const ParseError& e) {
    throw FixtureError(where + ": source does not parse: " + e.what());
  }
  try {
    p.form = from_record(field(obj, "expected", where));
  } catch (const RecordError& e) {
    throw FixtureError(where + ": bad expected record: " + e.what());
  }
  if (parsed != p.form) {
    throw FixtureError(where + ": expected record disagrees with the parsed source");
  }
  return p;
}

FactorType factor(const json& row, const char* key, const std::string& where) {
  auto t = parse_factor_type(text_field(row, key, where));
  if (!t || *t == FactorType::trans_sasakian) {
    throw FixtureError(where + ": bad factor type in '" + key + "'");
  }
  return *t;
}

std::pair<int, int> printed_columns(FactorType t) {
  switch (t) {
    case FactorType::alpha_sasakian: return {1, 0};
    case FactorType::beta_kenmotsu: return {0, 1};
    default: return {0, 0};
  }
}

}  // namespace

FixtureSet load_fixtures(const json& doc) {
  FixtureSet out;
  out.version = field(doc, "version", "fixtures").get<int>();
  if (out.version != 1) throw FixtureError("unsupported fixture version");

  for (const auto& e : field(doc, "equations", "fixtures")) {
    EquationFixture eq;
    eq.id = text_field(e, "id", "equation");
    const std::string where = "equation " + eq.id;
    eq.description = text_field(e, "description", where);
    auto conv = parse_convention(text_field(e, "convention", where));
    if (!conv) throw FixtureError(where + ": bad convention");
    eq.convention = *conv;
    eq.printed = printed(e, where);
    out.equations.push_back(std::move(eq));
  }

  for (const auto& t : field(doc, "tables", "fixtures")) {
    TableFixture table;
    table.id = field(t, "table", "table").get<int>();
    const std::string where = "table " + std::to_string(table.id);
    table.m1 = field(t, "m1", where).get<unsigned>();
    table.m2 = field(t, "m2", where).get<unsigned>();
    auto cond = parse_condition(text_field(t, "condition", where));
    if (!cond) throw FixtureError(where + ": bad condition");
    table.condition = *cond;

    std::set<std::pair<FactorType, FactorType>> pairs;
    for (const auto& r : field(t, "rows", where)) {
      RowFixture row;
      row.row = field(r, "row", where).get<int>();
      const std::string rwhere = where + " row " + std::to_string(row.row);
      row.factor1 = factor(r, "factor1", rwhere);
      row.factor2 = factor(r, "factor2", rwhere);
      for (Param p : kParams) {
        row.columns[slot(p)] = field(r, std::string(param_name(p)).c_str(), rwhere).get<int>();
      }
      const auto [a1, b1] = printed_columns(row.factor1);
      const auto [a2, b2] = printed_columns(row.factor2);
      if (row.columns != std::array<int, 4>{a1, b1, a2, b2}) {
        throw FixtureError(rwhere + ": 0/1 columns disagree with the factor types");
      }
      if (!pairs.insert({row.factor1, row.factor2}).second) {
        throw FixtureError(rwhere + ": repeated structure pair");
      }
      row.printed = printed(r, rwhere);
      table.rows.push_back(std::move(row));
    }
    if (table.rows.size() != 9) throw FixtureError(where + ": expected 9 rows");
    out.tables.push_back(std::move(table));
  }
  std::sort(out.tables.begin(), out.tables.end(),
            [](const TableFixture& a, const TableFixture& b) { return a.id < b.id; });
  return out;
}

const char* embedded_fixture_text() { return detail::kFixtureJson; }

const FixtureSet& embedded_fixtures() {
  static const FixtureSet set = load_fixtures(json::parse(detail::kFixtureJson));
  return set;
}

}  // namespace astheno
