#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "astheno/scalar.hpp"

namespace astheno {

enum class Generator : std::uint8_t { eta1, eta2, phi1, phi2 };

// Wedge word eta1^a eta2^b Phi1^p Phi2^q written in the canonical generator
// order eta1 < eta2 < Phi1 < Phi2. Signs live in the coefficient.
struct Monomial {
  std::uint8_t eta1 = 0;  // 0 or 1
  std::uint8_t eta2 = 0;  // 0 or 1
  std::uint32_t phi1 = 0;
  std::uint32_t phi2 = 0;

  static Monomial of(Generator g);

  constexpr std::uint64_t degree() const {
    return std::uint64_t{eta1} + eta2 + 2ULL * phi1 + 2ULL * phi2;
  }
  constexpr std::uint64_t factor1_degree() const { return std::uint64_t{eta1} + 2ULL * phi1; }
  constexpr std::uint64_t factor2_degree() const { return std::uint64_t{eta2} + 2ULL * phi2; }
  constexpr bool is_unit() const { return eta1 == 0 && eta2 == 0 && phi1 == 0 && phi2 == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Printing order: by degree, then eta1, eta2, Phi1, Phi2 exponents descending.
  friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs);
};

struct SignedMonomial {
  Monomial monomial;
  int sign = 1;
};

// Graded-commutative product of two monomials; empty when an odd generator
// repeats.
std::optional<SignedMonomial> multiply(const Monomial& lhs, const Monomial& rhs);

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Product M1 x M2 of almost-contact manifolds of real dimensions 2*m1+1 and
// 2*m2+1. The flags select the quotient the algebra is computed in.
class ProductGeometry {
 public:
  ProductGeometry(unsigned m1, unsigned m2, bool truncate = true, bool reduce_ring = true);

  unsigned m1() const noexcept { return m1_; }
  unsigned m2() const noexcept { return m2_; }
  // Complex dimension of the product.
  unsigned m() const noexcept { return m1_ + m2_ + 1; }
  unsigned real_dim1() const noexcept { return 2 * m1_ + 1; }
  unsigned real_dim2() const noexcept { return 2 * m2_ + 1; }
  bool truncate() const noexcept { return truncate_; }
  bool reduce_ring() const noexcept { return reduce_ring_; }

  ProductGeometry with_truncation(bool on) const;
  ProductGeometry with_ring_reduction(bool on) const;

  // True when the monomial survives truncation (Phi_i^p = 0 for p > m_i).
  bool admits(const Monomial& m) const noexcept { return m.phi1 <= m1_ && m.phi2 <= m2_; }

  friend bool operator==(const ProductGeometry&, const ProductGeometry&) = default;

 private:
  unsigned m1_;
  unsigned m2_;
  bool truncate_;
  bool reduce_ring_;
};

// Finite Scalar-weighted sum of canonical monomials. No stored coefficient is
// zero, so structural equality is equality of forms.
class Form {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  Form() = default;
  Form(const Scalar& s);  // NOLINT(google-explicit-constructor): scalars are 0-forms
  Form(int c) : Form(Scalar(c)) {}  // NOLINT

  static Form generator(Generator g);
  static Form term(const Monomial& m, const Scalar& s);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;

  // Degree when every term has the same degree; empty for 0 and mixed forms.
  std::optional<std::uint64_t> degree() const;
  // True when only the unit monomial occurs (includes 0).
  bool is_scalar() const;

  void add_term(const Monomial& m, const Scalar& s);

  Form& operator+=(const Form& rhs);
  Form& operator-=(const Form& rhs);
  friend Form operator+(Form lhs, const Form& rhs) { return lhs += rhs; }
  friend Form operator-(Form lhs, const Form& rhs) { return lhs -= rhs; }
  friend Form operator-(Form f);
  friend bool operator==(const Form&, const Form&) = default;

  // Applies fn to every coefficient and drops zeros.
  template <typename Fn>
  Form map_coefficients(Fn&& fn) const {
    Form out;
    for (const auto& [m, s] : terms_) out.add_term(m, fn(s));
    return out;
  }

 private:
  TermMap terms_;
};

Form add(const Form& lhs, const Form& rhs);
Form negate(const Form& f);
Form scale(const Scalar& s, const Form& f);
Form scale(const Scalar& s, const Form& f, const ProductGeometry& geom);

// Graded-commutative product in the free algebra (no truncation, no ring
// reduction).
Form wedge(const Form& lhs, const Form& rhs);
Form wedge(const Form& lhs, const Form& rhs, const ProductGeometry& geom);
// k-fold wedge; k = 0 gives the unit.
Form power(const Form& f, unsigned k);
Form power(const Form& f, unsigned k, const ProductGeometry& geom);

// Drops monomials with Phi1^p, p > m1 or Phi2^q, q > m2, regardless of the
// geometry's truncate flag.
Form truncate(const Form& f, const ProductGeometry& geom);
Form reduce_ring(const Form& f);
// Applies the truncation and ring reduction selected by the geometry.
Form canonicalize(const Form& f, const ProductGeometry& geom);

bool is_zero(const Form& f);
bool equal(const Form& lhs, const Form& rhs);

}  // namespace astheno
