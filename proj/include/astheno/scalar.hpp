#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace astheno {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Structure constants of the two factors. The enumerator value is the slot
// in an exponent vector.
enum class Param : std::uint8_t { alpha1 = 0, beta1 = 1, alpha2 = 2, beta2 = 3 };

inline constexpr std::array<Param, 4> kParams{Param::alpha1, Param::beta1, Param::alpha2,
                                              Param::beta2};

constexpr std::size_t slot(Param p) { return static_cast<std::size_t>(p); }

// Short identifier used by the text grammar: a1, b1, a2, b2.
std::string_view param_name(Param p);
// LaTeX symbol: \alpha_1, ...
std::string_view param_latex(Param p);
std::optional<Param> param_from_name(std::string_view name);

using Exponents = std::array<std::uint32_t, 4>;

// Term order of a Scalar: higher total degree first, then lexicographically
// larger exponent vectors first (so a1 terms precede b1 terms, etc.).
struct ExponentOrder {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

// Per-parameter assignment; an empty slot keeps the parameter symbolic.
using ParamValues = std::array<std::optional<Rational>, 4>;

// Exact polynomial in a1, b1, a2, b2 with rational coefficients.
// Zero coefficients are never stored.
class Scalar {
 public:
  using TermMap = std::map<Exponents, Rational, ExponentOrder>;

  Scalar() = default;
  Scalar(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Scalar(long long constant) : Scalar(Rational(constant)) {}  // NOLINT
  Scalar(int constant) : Scalar(Rational(constant)) {}        // NOLINT

  static Scalar parameter(Param p);
  static Scalar monomial(const Exponents& exponents, const Rational& coefficient);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Value of a polynomial with no parameter dependence.
  std::optional<Rational> as_constant() const;
  bool involves(Param p) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
  friend Scalar operator-(Scalar s);
  friend bool operator==(const Scalar&, const Scalar&) = default;

  Scalar pow(unsigned k) const;

  // Replaces each parameter by the polynomial images[slot(p)].
  Scalar compose(const std::array<Scalar, 4>& images) const;
  // Substitutes fixed values; empty slots stay symbolic.
  Scalar substitute(const ParamValues& values) const;
  Rational evaluate(const std::array<Rational, 4>& values) const;

  // Adds c * params^e, merging with an existing term.
  void add_term(const Exponents& e, const Rational& c);

 private:
  TermMap terms_;
};

// Quotient by the ideal (a1*b1, a2*b2).
Scalar reduce_ring(const Scalar& s);
bool is_ring_reduced(const Scalar& s);

}  // namespace astheno
