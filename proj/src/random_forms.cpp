#include "astheno/random_forms.hpp"

#include <vector>

namespace astheno {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational random_rational(Rng& rng, int bound) {
  return Rational(uniform(rng, -bound, bound), uniform(rng, 1, bound));
}

Scalar random_scalar(Rng& rng, const RandomFormOptions& opt) {
  Scalar s;
  const int n = uniform(rng, 1, static_cast<int>(opt.max_scalar_terms));
  for (int i = 0; i < n; ++i) {
    Exponents e{};
    for (auto& x : e) x = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(opt.max_param_degree)));
    if (opt.ring_reduced) {
      if (e[slot(Param::alpha1)] && e[slot(Param::beta1)]) e[slot(Param::beta1)] = 0;
      if (e[slot(Param::alpha2)] && e[slot(Param::beta2)]) e[slot(Param::beta2)] = 0;
    }
    s.add_term(e, random_rational(rng, opt.coefficient_bound));
  }
  return s;
}

Monomial random_monomial(Rng& rng, const RandomFormOptions& opt) {
  Monomial m;
  m.eta1 = static_cast<std::uint8_t>(uniform(rng, 0, 1));
  m.eta2 = static_cast<std::uint8_t>(uniform(rng, 0, 1));
  m.phi1 = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(opt.max_phi)));
  m.phi2 = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(opt.max_phi)));
  return m;
}

Form random_form(Rng& rng, const RandomFormOptions& opt) {
  Form f;
  const int n = uniform(rng, 1, static_cast<int>(opt.max_terms));
  for (int i = 0; i < n; ++i) f.add_term(random_monomial(rng, opt), random_scalar(rng, opt));
  return f;
}

Form random_homogeneous_form(Rng& rng, unsigned degree, const RandomFormOptions& opt) {
  std::vector<Monomial> pool;
  for (std::uint8_t a = 0; a <= 1; ++a) {
    for (std::uint8_t b = 0; b <= 1; ++b) {
      for (std::uint32_t p = 0; p <= opt.max_phi; ++p) {
        for (std::uint32_t q = 0; q <= opt.max_phi; ++q) {
          Monomial m;
          m.eta1 = a;
          m.eta2 = b;
          m.phi1 = p;
          m.phi2 = q;
          if (m.degree() == degree) pool.push_back(m);
        }
      }
    }
  }
  Form f;
  if (pool.empty()) return f;
  const int n = uniform(rng, 1, static_cast<int>(opt.max_terms));
  for (int i = 0; i < n; ++i) {
    f.add_term(pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))],
               random_scalar(rng, opt));
  }
  return f;
}

std::array<Rational, 4> random_parameters(Rng& rng, int bound) {
  std::array<Rational, 4> out;
  for (auto& x : out) x = random_rational(rng, bound);
  return out;
}

}  // namespace astheno
