#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "astheno/form.hpp"

namespace astheno {

// Product rule used by d. Graded: d(x^y) = dx^y + (-1)^deg(x) x^dy.
// Ungraded drops the sign; since it is not compatible with the algebra's
// relations it is applied letter by letter to the canonical word.
enum class LeibnizConvention { graded, ungraded };

// astheno: dd^c Omega^(m-2); skt: dd^c Omega; gauduchon: dd^c Omega^(m-1).
enum class ConditionKind { astheno, skt, gauduchon };

std::string_view to_string(LeibnizConvention c);
std::string_view to_string(ConditionKind k);
std::optional<LeibnizConvention> parse_convention(std::string_view s);
std::optional<ConditionKind> parse_condition(std::string_view s);

class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// d eta_i = a_i Phi_i, d Phi_i = 2 b_i eta_i ^ Phi_i, d(scalar) = 0.
// Without a geometry the result lives in the free algebra.
Form exterior_d(const Form& f, LeibnizConvention conv);
Form exterior_d(const Form& f, LeibnizConvention conv, const ProductGeometry& geom);

// Algebra automorphism eta1 -> eta2, eta2 -> -eta1, Phi_i fixed.
Form j_action(const Form& f);

Form d_c(const Form& f, LeibnizConvention conv);
Form d_c(const Form& f, LeibnizConvention conv, const ProductGeometry& geom);

// Phi1 + Phi2 - 2 eta1 ^ eta2
Form kahler_form();

// d d^c (Omega^k), computed directly.
Form ddc_power_direct(unsigned k, const ProductGeometry& geom, LeibnizConvention conv);
// k [dd^c Omega ^ Omega + (k-1) d Omega ^ d^c Omega] ^ Omega^(k-2), k >= 2.
Form ddc_power_expansion(unsigned k, const ProductGeometry& geom, LeibnizConvention conv);

// Minimum complex dimension for which the condition is defined.
unsigned minimum_dimension(ConditionKind kind);

// Throws GeometryError below the minimum dimension. For astheno with m >= 4
// the graded branch computes both routes and throws InconsistencyError if
// they differ; the ungraded branch returns the expansion.
Form condition_tensor(ConditionKind kind, const ProductGeometry& geom, LeibnizConvention conv);

struct IdentityComparison {
  Form computed;
  Form expected;
  Form diff;  // computed - expected
  bool matches() const { return diff.is_zero(); }
};

struct WedgeIdentityReport {
  IdentityComparison d_wedge_dc;    // d Omega ^ d^c Omega
  IdentityComparison ddc_wedge_omega;  // dd^c Omega ^ Omega
  bool matches() const { return d_wedge_dc.matches() && ddc_wedge_omega.matches(); }
};

// Recomputes the two wedge products and compares them with the transcribed
// fixtures, both canonicalized under geom. Requires m >= 4.
WedgeIdentityReport wedge_identity_check(const ProductGeometry& geom, LeibnizConvention conv);

}  // namespace astheno
