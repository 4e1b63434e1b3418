#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "astheno/calculus.hpp"
#include "astheno/form.hpp"
#include "astheno/structure.hpp"

namespace astheno {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A printed expression: verbatim LaTeX, its transcription into the text
// grammar, and the canonical form (stored as a record, checked against the
// parsed source at load time).
struct PrintedExpression {
  std::string latex;
  std::string source;
  Form form;
  std::string note;
};

struct EquationFixture {
  std::string id;  // d_omega, dc_omega, ...
  std::string description;
  LeibnizConvention convention = LeibnizConvention::ungraded;
  PrintedExpression printed;
};

struct RowFixture {
  int row = 0;
  FactorType factor1 = FactorType::cosymplectic;
  FactorType factor2 = FactorType::cosymplectic;
  // Printed 0/1 columns, indexed by slot(Param).
  std::array<int, 4> columns{};
  PrintedExpression printed;

  bool printed_zero() const { return printed.form.is_zero(); }
  StructureSpec spec() const { return StructureSpec::of(factor1, factor2); }
};

struct TableFixture {
  int id = 0;
  unsigned m1 = 1;
  unsigned m2 = 1;
  ConditionKind condition = ConditionKind::astheno;
  std::vector<RowFixture> rows;
};

struct FixtureSet {
  int version = 0;
  std::vector<EquationFixture> equations;
  std::vector<TableFixture> tables;

  const EquationFixture& equation(std::string_view id) const;
  const TableFixture& table(int id) const;  // throws std::out_of_range
};

// Parses and validates a fixture document.
FixtureSet load_fixtures(const nlohmann::json& doc);
// The fixture data compiled into the library.
const FixtureSet& embedded_fixtures();
const char* embedded_fixture_text();

}  // namespace astheno
