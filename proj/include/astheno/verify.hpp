#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "astheno/classify.hpp"

namespace astheno {

// Engine invariants can pass or fail; comparisons with printed results
// pass or produce findings.
enum class CheckStatus { pass, fail, finding };
std::string_view to_string(CheckStatus s);

struct Check {
  std::string id;
  bool invariant = false;
  CheckStatus status = CheckStatus::pass;
  std::string summary;
  nlohmann::json details = nlohmann::json::object();
};

struct KenmotsuPairCase {
  int table = 0;
  LeibnizConvention convention = LeibnizConvention::graded;
  Form residual;  // kenmotsu x kenmotsu, truncated, symbolic b1, b2
  std::vector<ConditionOutcome> outcomes;
  bool b1_equals_b2 = false;       // b1 = b2 annihilates
  bool b1_equals_minus_b2 = false;  // b1 = -b2 annihilates
};

// Row 4 (beta-Kenmotsu x beta-Kenmotsu) of Tables 1-3 under both conventions.
std::vector<KenmotsuPairCase> kenmotsu_pair_audit();

struct VerifyReport {
  std::vector<Check> checks;
  bool passed() const;  // no invariant failed
  std::size_t count(CheckStatus s) const;
};

VerifyReport verify_paper();

}  // namespace astheno
