#include "astheno/structure.hpp"

#include <tuple>
#include <utility>

namespace astheno {

std::string_view to_string(FactorType t) {
  switch (t) {
    case FactorType::alpha_sasakian: return "alpha-sasakian";
    case FactorType::beta_kenmotsu: return "beta-kenmotsu";
    case FactorType::cosymplectic: return "cosymplectic";
    case FactorType::trans_sasakian: return "trans-sasakian";
  }
  return "?";
}

std::optional<FactorType> parse_factor_type(std::string_view s) {
  if (s == "alpha-sasakian" || s == "sasakian") return FactorType::alpha_sasakian;
  if (s == "beta-kenmotsu" || s == "kenmotsu") return FactorType::beta_kenmotsu;
  if (s == "cosymplectic") return FactorType::cosymplectic;
  if (s == "trans-sasakian") return FactorType::trans_sasakian;
  return std::nullopt;
}

namespace {

void check_factor(const FactorSpec& f, int index, bool ring_reduction) {
  const std::string where = "factor" + std::to_string(index) + " (" +
                            std::string(to_string(f.type)) + ")";
  auto nonzero = [](const std::optional<Rational>& v) { return v && *v != 0; };
  switch (f.type) {
    case FactorType::alpha_sasakian:
      if (f.alpha && *f.alpha == 0) throw SpecError(where + ": alpha must be nonzero");
      if (nonzero(f.beta)) throw SpecError(where + ": beta must be 0");
      break;
    case FactorType::beta_kenmotsu:
      if (f.beta && *f.beta == 0) throw SpecError(where + ": beta must be nonzero");
      if (nonzero(f.alpha)) throw SpecError(where + ": alpha must be 0");
      break;
    case FactorType::cosymplectic:
      if (nonzero(f.alpha) || nonzero(f.beta)) {
        throw SpecError(where + ": alpha and beta must be 0");
      }
      break;
    case FactorType::trans_sasakian:
      if (ring_reduction && nonzero(f.alpha) && nonzero(f.beta)) {
        throw SpecError(where + ": alpha*beta must vanish under ring reduction");
      }
      break;
  }
}

std::pair<std::optional<Rational>, std::optional<Rational>> factor_values(const FactorSpec& f) {
  switch (f.type) {
    case FactorType::alpha_sasakian: return {f.alpha, Rational(0)};
    case FactorType::beta_kenmotsu: return {Rational(0), f.beta};
    case FactorType::cosymplectic: return {Rational(0), Rational(0)};
    case FactorType::trans_sasakian: return {f.alpha, f.beta};
  }
  return {};
}

}  // namespace

void StructureSpec::validate(bool ring_reduction) const {
  check_factor(factor1, 1, ring_reduction);
  check_factor(factor2, 2, ring_reduction);
}

ParamValues StructureSpec::values() const {
  ParamValues v;
  std::tie(v[slot(Param::alpha1)], v[slot(Param::beta1)]) = factor_values(factor1);
  std::tie(v[slot(Param::alpha2)], v[slot(Param::beta2)]) = factor_values(factor2);
  return v;
}

std::string StructureSpec::label() const {
  return std::string(to_string(factor1.type)) + " x " + std::string(to_string(factor2.type));
}

}  // namespace astheno
