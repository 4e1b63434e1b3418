#include <doctest.h>

#include "astheno/calculus.hpp"
#include "astheno/expr_io.hpp"
#include "astheno/random_forms.hpp"

using namespace astheno;

namespace {
Form gen(Generator g) { return Form::generator(g); }
const Form eta1 = gen(Generator::eta1);
const Form eta2 = gen(Generator::eta2);
const Form phi1 = gen(Generator::phi1);
const Form phi2 = gen(Generator::phi2);
Form par(Param p) { return Form(Scalar::parameter(p)); }

// Sign picked up when swapping homogeneous x and y.
int swap_sign(const Form& x, const Form& y) {
  return (*x.degree() * *y.degree()) % 2 == 0 ? 1 : -1;
}
}  // namespace

TEST_SUITE("form") {
  TEST_CASE("generator relations") {
    CHECK(wedge(eta1, eta1).is_zero());
    CHECK(wedge(phi1, eta1) == wedge(eta1, phi1));
    CHECK(wedge(eta2, eta1) == -wedge(eta1, eta2));
    CHECK(equal(wedge(eta1, phi2), wedge(phi2, eta1)));
    CHECK(power(phi1, 0) == Form(1));
    CHECK(power(eta1, 2).is_zero());
  }

  TEST_CASE("like terms and zero") {
    const Form omega = kahler_form();
    CHECK((omega + (-omega)).is_zero());
    CHECK(scale(Scalar(0), omega).is_zero());
    CHECK(add(phi1, phi1) == scale(Scalar(2), phi1));
    CHECK(is_zero(omega - omega));
    CHECK(omega == phi1 + phi2 - scale(Scalar(2), wedge(eta1, eta2)));
  }

  TEST_CASE("products with coefficients and truncation") {
    const Form b1 = par(Param::beta1);
    const Form x = wedge(wedge(scale(Scalar(2), b1), eta1), phi1);
    const Form y = wedge(wedge(b1, eta2), phi1);
    const Form expected =
        wedge(wedge(wedge(scale(Scalar(2), wedge(b1, b1)), eta1), eta2), power(phi1, 2));
    CHECK(wedge(x, y) == expected);
    CHECK(wedge(x, y, ProductGeometry(1, 1)).is_zero());
    CHECK(truncate(expected, ProductGeometry(2, 1)) == expected);
  }

  TEST_CASE("square of the Kahler form") {
    const Form omega = kahler_form();
    const Form expected = power(phi1, 2) + scale(Scalar(2), wedge(phi1, phi2)) + power(phi2, 2) -
                          scale(Scalar(4), wedge(wedge(eta1, eta2), phi1)) -
                          scale(Scalar(4), wedge(wedge(eta1, eta2), phi2));
    CHECK(power(omega, 2) == expected);
  }

  TEST_CASE("volume form coefficient") {
    const Form omega = kahler_form();
    const unsigned fact[] = {1, 1, 2, 6, 24, 120, 720, 5040};
    for (unsigned m1 = 1; m1 <= 3; ++m1) {
      for (unsigned m2 = 1; m2 <= 3; ++m2) {
        const ProductGeometry g(m1, m2);
        const unsigned m = g.m();
        Monomial vol{1, 1, m1, m2};
        const Form expected =
            Form::term(vol, Scalar(Rational(-2LL * fact[m], static_cast<long long>(fact[m1] * fact[m2]))));
        CAPTURE(m1);
        CAPTURE(m2);
        CHECK(power(omega, m, g) == expected);
        CHECK(power(omega, m + 1, g).is_zero());
      }
    }
  }

  TEST_CASE("ring reduction of forms") {
    const Form f = wedge(par(Param::alpha1), wedge(par(Param::beta1), phi1)) + par(Param::alpha2);
    CHECK(reduce_ring(f) == par(Param::alpha2));
    const ProductGeometry off(1, 1, true, false);
    CHECK(canonicalize(f, off) == f);
    CHECK(canonicalize(f, ProductGeometry(1, 1)) == par(Param::alpha2));
  }

  TEST_CASE("geometry validation") {
    CHECK_THROWS_AS(ProductGeometry(0, 1), GeometryError);
    CHECK_THROWS_AS(ProductGeometry(2, 0), GeometryError);
    const ProductGeometry g(2, 3);
    CHECK(g.m() == 6);
    CHECK(g.real_dim1() == 5);
    CHECK(g.real_dim2() == 7);
    CHECK(g.admits(Monomial{0, 0, 2, 3}));
    CHECK_FALSE(g.admits(Monomial{0, 0, 3, 0}));
  }

  TEST_CASE("associativity and graded commutativity on random triples") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      const Form x = random_homogeneous_form(rng, 1 + rng() % 4);
      const Form y = random_homogeneous_form(rng, 1 + rng() % 4);
      const Form z = random_form(rng);
      CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
      CHECK(wedge(x, y + z) == wedge(x, y) + wedge(x, z));
      if (!x.is_zero() && !y.is_zero()) {
        CHECK(wedge(y, x) == scale(Scalar(swap_sign(x, y)), wedge(x, y)));
      }
      const ProductGeometry g(1 + rng() % 3, 1 + rng() % 3);
      CHECK(wedge(x, y, g) == truncate(wedge(x, y), g.with_ring_reduction(false)).map_coefficients(
                                  [](const Scalar& s) { return reduce_ring(s); }));
    }
  }

  TEST_CASE("scaling commutes with products") {
    Rng rng(5);
    for (int lambda : {1, 2, -3}) {
      for (int i = 0; i < 50; ++i) {
        const Form x = random_form(rng);
        const Form y = random_form(rng);
        CHECK(wedge(scale(Scalar(lambda), x), y) == scale(Scalar(lambda), wedge(x, y)));
        CHECK(power(scale(Scalar(lambda), x), 2) == scale(Scalar(lambda * lambda), power(x, 2)));
      }
    }
  }
}
