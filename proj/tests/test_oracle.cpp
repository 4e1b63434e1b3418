#include <doctest.h>

#include "astheno/calculus.hpp"
#include "astheno/oracle.hpp"
#include "astheno/random_forms.hpp"

using namespace astheno;
using oracle::grassmann_oracle;
using oracle::Multivector;

TEST_SUITE("oracle") {
  TEST_CASE("basis vectors anticommute") {
    const Multivector e0 = Multivector::basis(0);
    const Multivector e1 = Multivector::basis(1);
    CHECK(oracle::wedge(e0, e0).is_zero());
    CHECK(oracle::wedge(e0, e1) + oracle::wedge(e1, e0) == Multivector());
  }

  TEST_CASE("odd squares and Phi powers beyond the factor dimension vanish") {
    const std::array<Rational, 4> p{1, 2, 3, 4};
    for (unsigned m1 = 1; m1 <= 3; ++m1) {
      const ProductGeometry g(m1, 2);
      const oracle::Model model(g);
      CHECK(oracle::power(model.generator(Generator::phi1), m1 + 1).is_zero());
      CHECK_FALSE(oracle::power(model.generator(Generator::phi1), m1).is_zero());
      CHECK(grassmann_oracle(wedge(Form::generator(Generator::eta1), Form::generator(Generator::eta1)),
                             g, p)
                .is_zero());
    }
  }

  TEST_CASE("model bound") {
    CHECK_THROWS_AS(oracle::Model(ProductGeometry(4, 1)), GeometryError);
  }

  TEST_CASE("symbolic products agree with the model") {
    Rng rng(2024);
    for (unsigned m1 = 1; m1 <= 3; ++m1) {
      for (unsigned m2 = 1; m2 <= 3; ++m2) {
        const ProductGeometry g(m1, m2, true, false);
        for (int i = 0; i < 100; ++i) {
          const Form x = random_form(rng);
          const Form y = random_form(rng);
          const auto p = random_parameters(rng, 5);
          const auto ox = grassmann_oracle(x, g, p);
          const auto oy = grassmann_oracle(y, g, p);
          CAPTURE(m1);
          CAPTURE(m2);
          CHECK(grassmann_oracle(wedge(x, y, g), g, p) == oracle::wedge(ox, oy));
          CHECK(grassmann_oracle(power(x, 2, g), g, p) == oracle::power(ox, 2));
          CHECK(grassmann_oracle(x + y, g, p) == ox + oy);
        }
      }
    }
  }

  TEST_CASE("volume form agrees with the model") {
    const std::array<Rational, 4> p{0, 0, 0, 0};
    for (unsigned m1 = 1; m1 <= 3; ++m1) {
      for (unsigned m2 = 1; m2 <= 3; ++m2) {
        const ProductGeometry g(m1, m2);
        const oracle::Model model(g);
        const Multivector omega = model.evaluate(kahler_form(), p);
        CHECK(grassmann_oracle(power(kahler_form(), g.m(), g), g, p) ==
              oracle::power(omega, g.m()));
        CHECK_FALSE(oracle::power(omega, g.m()).is_zero());
      }
    }
  }
}
