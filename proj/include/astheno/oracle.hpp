#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "astheno/form.hpp"

namespace astheno::oracle {

// Element of an exterior algebra on at most 32 explicit anticommuting basis
// vectors. A blade is the bitmask of its basis vectors in increasing order.
class Multivector {
 public:
  using Blade = std::uint32_t;

  Multivector() = default;
  static Multivector scalar(const Rational& c);
  static Multivector basis(unsigned index);

  const std::map<Blade, Rational>& blades() const noexcept { return blades_; }
  bool is_zero() const noexcept { return blades_.empty(); }

  void add(Blade b, const Rational& c);
  Multivector& operator+=(const Multivector& rhs);
  friend Multivector operator+(Multivector lhs, const Multivector& rhs) { return lhs += rhs; }
  friend Multivector operator*(const Rational& c, const Multivector& v);
  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  std::map<Blade, Rational> blades_;
};

Multivector wedge(const Multivector& lhs, const Multivector& rhs);
Multivector power(const Multivector& v, unsigned k);

// Concrete model of the product algebra: eta1 = e0, Phi1 = sum e(2j-1)^e(2j)
// over the first factor's basis, and the same for the second factor on a
// disjoint block of basis vectors.
class Model {
 public:
  static constexpr unsigned kMaxHalfDimension = 3;

  // Throws GeometryError when either half-dimension exceeds the bound.
  explicit Model(const ProductGeometry& geom);

  unsigned dimension() const noexcept { return 2 * (m1_ + m2_) + 2; }
  const Multivector& generator(Generator g) const;

  // Substitutes the parameter values and evaluates the form in the model.
  Multivector evaluate(const Form& f, const std::array<Rational, 4>& params) const;

 private:
  unsigned m1_;
  unsigned m2_;
  std::array<Multivector, 4> generators_;
};

Multivector grassmann_oracle(const Form& f, const ProductGeometry& geom,
                             const std::array<Rational, 4>& params);

}  // namespace astheno::oracle
