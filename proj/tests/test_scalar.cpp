#include <doctest.h>

#include "astheno/random_forms.hpp"
#include "astheno/scalar.hpp"

using namespace astheno;

namespace {
Scalar a1() { return Scalar::parameter(Param::alpha1); }
Scalar b1() { return Scalar::parameter(Param::beta1); }
Scalar a2() { return Scalar::parameter(Param::alpha2); }
Scalar b2() { return Scalar::parameter(Param::beta2); }
}  // namespace

TEST_SUITE("scalar") {
  TEST_CASE("arithmetic merges and cancels terms") {
    CHECK((a1() + a1()) == Scalar(2) * a1());
    CHECK((a1() - a1()).is_zero());
    CHECK(((a1() + b1()) * (a1() - b1())) == a1() * a1() - b1() * b1());
    CHECK(Scalar(Rational(1, 2)) * Scalar(2) == Scalar(1));
    CHECK((a1() + 1).pow(2) == a1() * a1() + Scalar(2) * a1() + 1);
    CHECK(a2().pow(0) == Scalar(1));
  }

  TEST_CASE("constants and involvement") {
    CHECK(Scalar(Rational(3, 4)).as_constant() == Rational(3, 4));
    CHECK_FALSE(a1().as_constant().has_value());
    CHECK(Scalar().as_constant() == Rational(0));
    CHECK((a1() * b2()).involves(Param::beta2));
    CHECK_FALSE((a1() * b2()).involves(Param::alpha2));
  }

  TEST_CASE("ring reduction drops a_i b_i multiples") {
    CHECK(reduce_ring(a1() * b1()).is_zero());
    CHECK(reduce_ring(a1() * b2()) == a1() * b2());
    const Scalar s = Scalar(3) * a1() * a1() + a2() * b2() * b1();
    CHECK(reduce_ring(s) == Scalar(3) * a1() * a1());
    CHECK(is_ring_reduced(a1() * a2() + b1() * b2()));
    CHECK_FALSE(is_ring_reduced(a2() * b2()));
  }

  TEST_CASE("substitution and evaluation") {
    const Scalar s = a1() * b2() + Scalar(2) * a2();
    ParamValues v{};
    v[slot(Param::alpha1)] = Rational(3);
    CHECK(s.substitute(v) == Scalar(3) * b2() + Scalar(2) * a2());
    CHECK(s.evaluate({Rational(1), Rational(0), Rational(1, 2), Rational(-2)}) == Rational(-1));
    const Scalar c = s.compose({b2(), b1(), a2(), b2()});
    CHECK(c == b2() * b2() + Scalar(2) * a2());
  }

  TEST_CASE("ring laws on random polynomials") {
    Rng rng(7);
    RandomFormOptions opt;
    opt.max_scalar_terms = 3;
    for (int i = 0; i < 100; ++i) {
      const Scalar x = random_scalar(rng, opt);
      const Scalar y = random_scalar(rng, opt);
      const Scalar z = random_scalar(rng, opt);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      const auto p = random_parameters(rng, 4);
      CHECK((x * y).evaluate(p) == x.evaluate(p) * y.evaluate(p));
      CHECK(reduce_ring(x * y) == reduce_ring(reduce_ring(x) * reduce_ring(y)));
    }
  }
}
