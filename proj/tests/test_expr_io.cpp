#include <doctest.h>

#include <fstream>
#include <string>

#include "astheno/calculus.hpp"
#include "astheno/expr_io.hpp"
#include "astheno/random_forms.hpp"

using namespace astheno;
using nlohmann::json;

namespace {
Form gen(Generator g) { return Form::generator(g); }

std::vector<std::string> negative_corpus() {
  std::ifstream in(std::string(ASTHENO_TEST_DATA) + "/data/negative_corpus.txt");
  REQUIRE(in.good());
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.message();
  }
  return "";
}
}  // namespace

TEST_SUITE("expr_io") {
  TEST_CASE("parse basics") {
    CHECK(parse("Phi1 + Phi2 - 2*eta1/\\eta2") == kahler_form());
    CHECK(parse("2*b1*a2*Phi2/\\Phi1") ==
          Form::term(Monomial{0, 0, 1, 1},
                     Scalar(2) * Scalar::parameter(Param::beta1) * Scalar::parameter(Param::alpha2)));
    CHECK(parse("eta1/\\eta1").is_zero());
    CHECK(parse("eta2/\\eta1") == -wedge(gen(Generator::eta1), gen(Generator::eta2)));
    CHECK(parse("-(a1 + b1)^2") == parse("-a1^2 - 2*a1*b1 - b1^2"));
    CHECK(parse("3/6*Phi1") == parse("1/2*Phi1"));
    CHECK(parse("Phi1^0") == Form(1));
    CHECK(parse("  0 ") == Form());
    CHECK(parse("eta1 /\\ a2*Phi2") == parse("a2*eta1/\\Phi2"));
  }

  TEST_CASE("error positions and messages") {
    try {
      parse("Phi1 +\n  Phi3");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.position().line == 2);
      CHECK(e.position().column == 3);
      CHECK(e.message() == "unknown identifier 'Phi3'");
    }
    CHECK(error_of("eta1^-1") == "negative exponent");
    CHECK(error_of("(Phi1").rfind("expected ')'", 0) == 0);
    CHECK(error_of("eta1 ∧ eta2") == "unexpected non-ASCII character");
  }

  TEST_CASE("negative corpus") {
    const auto corpus = negative_corpus();
    CHECK(corpus.size() >= 25);
    for (const auto& text : corpus) {
      CAPTURE(text);
      CHECK_THROWS_AS(parse(text), ParseError);
    }
  }

  TEST_CASE("text printer") {
    CHECK(print_text(Form()) == "0");
    CHECK(print_text(kahler_form()) == "-2*eta1/\\eta2 + Phi1 + Phi2");
    CHECK(print_text(parse("(a1 + b2)*eta1/\\Phi1")) == "(a1 + b2)*eta1/\\Phi1");
    CHECK(print_text(parse("-1/2*Phi2^3")) == "-1/2*Phi2^3");
    CHECK(print_text(parse("a1*b2 - 3")) == "a1*b2 - 3");
  }

  TEST_CASE("latex printer") {
    CHECK(print_latex(parse("-4*b2^2*eta1/\\eta2/\\Phi2")) ==
          "-4\\beta_2^2\\,\\eta_1\\wedge\\eta_2\\wedge\\Phi_2");
    CHECK(print_latex(Form()) == "0");
    CHECK(print_latex(parse("1/2*a1*Phi1")) == "\\frac{1}{2}\\alpha_1\\,\\Phi_1");
  }

  TEST_CASE("records") {
    CHECK(to_record(Form()) == json{{"terms", json::array()}});
    const Form f = parse("2*(b1*a2*Phi2/\\Phi1 + 2*b1^2*eta2/\\eta1/\\Phi1 - a2^2*Phi2^2)");
    CHECK(from_record(to_record(f)) == f);
    json dup = to_record(parse("Phi1"));
    dup["terms"].push_back(dup["terms"][0]);
    CHECK_THROWS_AS(from_record(dup), RecordError);
    json bad = to_record(parse("eta1"));
    bad["terms"][0]["eta1"] = 2;
    try {
      from_record(bad);
      FAIL("no error");
    } catch (const RecordError& e) {
      CHECK(e.path() == "/terms/0/eta1");
    }
    json extra = to_record(parse("eta1"));
    extra["terms"][0]["zeta"] = 1;
    CHECK_THROWS_AS(from_record(extra), RecordError);
    json zero = to_record(parse("eta1"));
    zero["terms"][0]["coeff"][0]["den"] = 0;
    CHECK_THROWS_AS(from_record(zero), RecordError);
  }

  TEST_CASE("round trips on random forms") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
      const Form f = random_form(rng);
      CHECK(parse(print_text(f)) == f);
      CHECK(from_record(to_record(f)) == f);
      CHECK(from_record(json::parse(to_record(f).dump())) == f);
    }
  }
}
