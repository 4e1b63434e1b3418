#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "astheno/cli.hpp"
#include "astheno/expr_io.hpp"

using namespace astheno;
using nlohmann::json;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(ASTHENO_TEST_DATA) + "/golden/" + name);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check exit codes") {
    auto zero = run({"check", "--m1", "1", "--m2", "2", "--factor1", "sasakian", "--factor2",
                     "cosymplectic", "--condition", "astheno"});
    CHECK(zero.code == cli::kExitOk);
    CHECK(zero.out.find("verdict:    identically-zero") != std::string::npos);

    auto nonzero = run({"check", "--m1", "2", "--m2", "2", "--factor1", "kenmotsu", "--factor2",
                        "kenmotsu", "--condition", "astheno"});
    CHECK(nonzero.code == cli::kExitNonzero);
    CHECK(nonzero.out == golden("check_kenmotsu_2x2.txt"));

    CHECK(run({"check", "--m1", "0", "--m2", "1", "--factor1", "sasakian", "--factor2",
               "cosymplectic"})
              .code == cli::kExitUsage);
    CHECK(run({"check", "--m1", "1", "--m2", "1", "--factor1", "kahler", "--factor2",
               "cosymplectic"})
              .code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({}).code == cli::kExitUsage);
  }

  TEST_CASE("eval") {
    auto d = run({"eval", "--expr", "Phi1 + Phi2 - 2*eta1/\\eta2", "--apply", "d", "--convention",
                  "ungraded"});
    CHECK(d.code == 0);
    CHECK(d.out == golden("eval_d_omega_ungraded.txt"));
    CHECK(run({"eval", "--expr", "eta1", "--apply", "d"}).out == "a1*Phi1\n");
    CHECK(run({"eval", "--expr", "eta1/\\eta1"}).out == "0\n");
    CHECK(run({"eval", "--expr", "eta1", "--apply", "j", "--apply", "j"}).out == "-eta1\n");

    auto bad = run({"eval", "--expr", "Phi1 + Phi3"});
    CHECK(bad.code == cli::kExitUsage);
    CHECK(bad.err.find("1:8") != std::string::npos);
  }

  TEST_CASE("json output is a valid record") {
    auto r = run({"eval", "--expr", "Phi1 + Phi2 - 2*eta1/\\eta2", "--apply", "dc", "--format",
                  "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(from_record(doc["result"]["record"]) == parse(doc["result"]["text"].get<std::string>()));

    auto c = run({"check", "--m1", "1", "--m2", "1", "--factor1", "kenmotsu", "--factor2",
                  "kenmotsu", "--format", "json"});
    const json report = json::parse(c.out);
    CHECK_NOTHROW(from_record(report["residual"]["record"]));
  }

  TEST_CASE("table") {
    auto t1 = run({"table", "--id", "1", "--convention", "ungraded"});
    CHECK(t1.code == cli::kExitNonzero);
    CHECK(t1.out == golden("table_1_ungraded.txt"));
    auto t10 = run({"table", "--id", "10"});
    CHECK(t10.out.find("row 7") != std::string::npos);
    CHECK(run({"table", "--id", "11"}).code == cli::kExitUsage);
    CHECK(run({"table", "--id", "0"}).code == cli::kExitUsage);
  }

  TEST_CASE("scan") {
    auto s = run({"scan", "--max-m1", "3", "--max-m2", "3", "--condition", "astheno"});
    CHECK(s.code == 0);
    CHECK(s.out == golden("scan_3x3_astheno.txt"));
    auto one = run({"scan", "--max-m1", "1", "--max-m2", "1"});
    CHECK(one.out == golden("scan_1x1_astheno.txt"));
    CHECK(run({"scan", "--max-m1", "0"}).code == cli::kExitUsage);
  }

  TEST_CASE("runs are deterministic") {
    const std::vector<std::string> args{"scan", "--max-m1", "2", "--max-m2", "2", "--format",
                                        "json"};
    CHECK(run(args).out == run(args).out);
  }
}
