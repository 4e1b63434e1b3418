#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "astheno/form.hpp"

namespace astheno {

// Sparse random forms for property checks. Everything is driven by the
// caller's engine so runs are reproducible from a seed.
struct RandomFormOptions {
  unsigned max_terms = 4;
  unsigned max_phi = 2;           // per Phi exponent
  unsigned max_scalar_terms = 2;  // per coefficient
  unsigned max_param_degree = 2;  // per parameter exponent
  int coefficient_bound = 5;      // numerators in [-bound, bound], denominators in [1, bound]
  bool ring_reduced = false;      // coefficients avoid a_i*b_i
};

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int bound);
Scalar random_scalar(Rng& rng, const RandomFormOptions& opt);
Monomial random_monomial(Rng& rng, const RandomFormOptions& opt);
Form random_form(Rng& rng, const RandomFormOptions& opt = {});
// Every term has the given degree; zero when no monomial of that degree fits.
Form random_homogeneous_form(Rng& rng, unsigned degree, const RandomFormOptions& opt = {});
std::array<Rational, 4> random_parameters(Rng& rng, int bound);

}  // namespace astheno
