#include <doctest.h>

#include "astheno/expr_io.hpp"
#include "astheno/fixtures.hpp"

using namespace astheno;
using nlohmann::json;

namespace {
json fixture_doc() { return json::parse(embedded_fixture_text()); }
}  // namespace

TEST_SUITE("fixtures") {
  TEST_CASE("embedded set loads") {
    const auto& fx = embedded_fixtures();
    CHECK(fx.equations.size() == 5);
    CHECK(fx.tables.size() == 10);
    for (const auto& t : fx.tables) CHECK(t.rows.size() == 9);
    CHECK(fx.table(4).m1 == 1);
    CHECK(fx.table(4).m2 == 3);
    CHECK(fx.equation("d_omega").convention == LeibnizConvention::ungraded);
    CHECK_THROWS_AS(fx.table(11), std::out_of_range);
    CHECK_THROWS_AS(fx.equation("nope"), std::out_of_range);
  }

  TEST_CASE("printed zeros") {
    int zeros = 0;
    for (const auto& t : embedded_fixtures().tables) {
      for (const auto& r : t.rows) zeros += r.printed_zero() ? 1 : 0;
    }
    CHECK(zeros == 19);
  }

  TEST_CASE("sources parse to the stored records") {
    for (const auto& t : embedded_fixtures().tables) {
      for (const auto& r : t.rows) {
        CAPTURE(t.id);
        CAPTURE(r.row);
        CHECK(parse(r.printed.source) == r.printed.form);
        CHECK_FALSE(r.printed.latex.empty());
      }
    }
  }

  TEST_CASE("validation rejects inconsistent documents") {
    {
      json doc = fixture_doc();
      doc["tables"][0]["rows"][1]["source"] = "Phi1";
      CHECK_THROWS_AS(load_fixtures(doc), FixtureError);
    }
    {
      json doc = fixture_doc();
      doc["tables"][0]["rows"].erase(0);
      CHECK_THROWS_AS(load_fixtures(doc), FixtureError);
    }
    {
      json doc = fixture_doc();
      doc["tables"][0]["rows"][1] = doc["tables"][0]["rows"][2];
      CHECK_THROWS_AS(load_fixtures(doc), FixtureError);
    }
    {
      json doc = fixture_doc();
      doc["equations"][0]["convention"] = "sideways";
      CHECK_THROWS_AS(load_fixtures(doc), FixtureError);
    }
    CHECK_NOTHROW(load_fixtures(fixture_doc()));
  }
}
