#include "astheno/scalar.hpp"

#include <numeric>

namespace astheno {

namespace {

constexpr std::array<std::string_view, 4> kNames{"a1", "b1", "a2", "b2"};
constexpr std::array<std::string_view, 4> kLatex{"\\alpha_1", "\\beta_1", "\\alpha_2", "\\beta_2"};

std::uint64_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool in_ideal(const Exponents& e) {
  return (e[slot(Param::alpha1)] > 0 && e[slot(Param::beta1)] > 0) ||
         (e[slot(Param::alpha2)] > 0 && e[slot(Param::beta2)] > 0);
}

}  // namespace

std::string_view param_name(Param p) { return kNames[slot(p)]; }
std::string_view param_latex(Param p) { return kLatex[slot(p)]; }

std::optional<Param> param_from_name(std::string_view name) {
  for (Param p : kParams) {
    if (kNames[slot(p)] == name) return p;
  }
  return std::nullopt;
}

bool ExponentOrder::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const auto dl = total_degree(lhs);
  const auto dr = total_degree(rhs);
  if (dl != dr) return dl > dr;
  return lhs > rhs;
}

Scalar::Scalar(const Rational& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

Scalar Scalar::parameter(Param p) {
  Exponents e{};
  e[slot(p)] = 1;
  return monomial(e, 1);
}

Scalar Scalar::monomial(const Exponents& exponents, const Rational& coefficient) {
  Scalar s;
  s.add_term(exponents, coefficient);
  return s;
}

std::optional<Rational> Scalar::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == Exponents{}) return terms_.begin()->second;
  return std::nullopt;
}

bool Scalar::involves(Param p) const {
  for (const auto& [e, c] : terms_) {
    if (e[slot(p)] > 0) return true;
  }
  return false;
}

void Scalar::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
  Scalar out;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& rhs) { return *this = *this * rhs; }

Scalar operator-(Scalar s) {
  for (auto& [e, c] : s.terms_) c = -c;
  return s;
}

Scalar Scalar::pow(unsigned k) const {
  Scalar result(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Scalar Scalar::compose(const std::array<Scalar, 4>& images) const {
  Scalar out;
  for (const auto& [e, c] : terms_) {
    Scalar term(c);
    for (Param p : kParams) {
      if (e[slot(p)] > 0) term *= images[slot(p)].pow(e[slot(p)]);
    }
    out += term;
  }
  return out;
}

Scalar Scalar::substitute(const ParamValues& values) const {
  std::array<Scalar, 4> images;
  for (Param p : kParams) {
    images[slot(p)] = values[slot(p)] ? Scalar(*values[slot(p)]) : Scalar::parameter(p);
  }
  return compose(images);
}

Rational Scalar::evaluate(const std::array<Rational, 4>& values) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= values[i];
    }
    total += term;
  }
  return total;
}

Scalar reduce_ring(const Scalar& s) {
  Scalar out;
  for (const auto& [e, c] : s.terms()) {
    if (!in_ideal(e)) out.add_term(e, c);
  }
  return out;
}

bool is_ring_reduced(const Scalar& s) {
  for (const auto& [e, c] : s.terms()) {
    if (in_ideal(e)) return false;
  }
  return true;
}

}  // namespace astheno
