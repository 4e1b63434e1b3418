#include "astheno/oracle.hpp"

#include <bit>
#include <string>

namespace astheno::oracle {

Multivector Multivector::scalar(const Rational& c) {
  Multivector v;
  v.add(0, c);
  return v;
}

Multivector Multivector::basis(unsigned index) {
  Multivector v;
  v.add(Blade{1} << index, 1);
  return v;
}

void Multivector::add(Blade b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = blades_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) blades_.erase(it);
  }
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  for (const auto& [b, c] : rhs.blades_) add(b, c);
  return *this;
}

Multivector operator*(const Rational& c, const Multivector& v) {
  Multivector out;
  for (const auto& [b, x] : v.blades_) out.add(b, c * x);
  return out;
}

namespace {

// Sign of e_A ^ e_B -> e_(A|B): one transposition for every pair i in A,
// j in B with i > j.
int blade_sign(Multivector::Blade a, Multivector::Blade b) {
  unsigned swaps = 0;
  while (b != 0) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(b));
    b &= b - 1;
    swaps += static_cast<unsigned>(std::popcount(a >> (j + 1)));
  }
  return (swaps & 1U) ? -1 : 1;
}

}  // namespace

Multivector wedge(const Multivector& lhs, const Multivector& rhs) {
  Multivector out;
  for (const auto& [a, ca] : lhs.blades()) {
    for (const auto& [b, cb] : rhs.blades()) {
      if ((a & b) != 0) continue;
      const Rational c = ca * cb;
      out.add(a | b, blade_sign(a, b) < 0 ? Rational(-c) : c);
    }
  }
  return out;
}

Multivector power(const Multivector& v, unsigned k) {
  Multivector result = Multivector::scalar(1);
  for (unsigned i = 0; i < k; ++i) result = wedge(result, v);
  return result;
}

Model::Model(const ProductGeometry& geom) : m1_(geom.m1()), m2_(geom.m2()) {
  if (m1_ > kMaxHalfDimension || m2_ > kMaxHalfDimension) {
    throw GeometryError("oracle supports half-dimensions up to " +
                        std::to_string(kMaxHalfDimension));
  }
  const unsigned base2 = 2 * m1_ + 1;
  generators_[0] = Multivector::basis(0);
  generators_[1] = Multivector::basis(base2);
  for (unsigned j = 1; j <= m1_; ++j) {
    generators_[2] += wedge(Multivector::basis(2 * j - 1), Multivector::basis(2 * j));
  }
  for (unsigned j = 1; j <= m2_; ++j) {
    generators_[3] +=
        wedge(Multivector::basis(base2 + 2 * j - 1), Multivector::basis(base2 + 2 * j));
  }
}

const Multivector& Model::generator(Generator g) const {
  return generators_[static_cast<std::size_t>(g)];
}

Multivector Model::evaluate(const Form& f, const std::array<Rational, 4>& params) const {
  Multivector out;
  for (const auto& [m, s] : f.terms()) {
    const Rational c = s.evaluate(params);
    if (c == 0) continue;
    Multivector word = Multivector::scalar(c);
    word = wedge(word, power(generator(Generator::eta1), m.eta1));
    word = wedge(word, power(generator(Generator::eta2), m.eta2));
    word = wedge(word, power(generator(Generator::phi1), m.phi1));
    word = wedge(word, power(generator(Generator::phi2), m.phi2));
    out += word;
  }
  return out;
}

Multivector grassmann_oracle(const Form& f, const ProductGeometry& geom,
                             const std::array<Rational, 4>& params) {
  return Model(geom).evaluate(f, params);
}

}  // namespace astheno::oracle
