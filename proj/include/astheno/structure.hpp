#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "astheno/scalar.hpp"

namespace astheno {

// Trans-Sasakian type of one factor: (a, 0), (0, b), (0, 0) or general (a, b).
enum class FactorType { alpha_sasakian, beta_kenmotsu, cosymplectic, trans_sasakian };

inline constexpr std::array<FactorType, 3> kTableFactorTypes{
    FactorType::alpha_sasakian, FactorType::beta_kenmotsu, FactorType::cosymplectic};

std::string_view to_string(FactorType t);
// Accepts the canonical names plus "sasakian" and "kenmotsu".
std::optional<FactorType> parse_factor_type(std::string_view s);

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Empty alpha/beta means symbolic.
struct FactorSpec {
  FactorType type = FactorType::cosymplectic;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;

  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

struct StructureSpec {
  FactorSpec factor1;
  FactorSpec factor2;

  static StructureSpec of(FactorType t1, FactorType t2) { return {{t1, {}, {}}, {t2, {}, {}}}; }

  // Throws SpecError when a factor contradicts its type, when a typed
  // parameter is given the value 0, or (with ring reduction) when a
  // trans-Sasakian factor has both parameters nonzero.
  void validate(bool ring_reduction) const;
  // Parameter assignment: forced zeros and numeric values; symbolic slots empty.
  ParamValues values() const;
  std::string label() const;

  friend bool operator==(const StructureSpec&, const StructureSpec&) = default;
};

}  // namespace astheno
