#include "astheno/form.hpp"

#include <tuple>

namespace astheno {

Monomial Monomial::of(Generator g) {
  Monomial m;
  switch (g) {
    case Generator::eta1: m.eta1 = 1; break;
    case Generator::eta2: m.eta2 = 1; break;
    case Generator::phi1: m.phi1 = 1; break;
    case Generator::phi2: m.phi2 = 1; break;
  }
  return m;
}

std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) {
  if (auto c = lhs.degree() <=> rhs.degree(); c != 0) return c;
  return std::tie(rhs.eta1, rhs.eta2, rhs.phi1, rhs.phi2) <=>
         std::tie(lhs.eta1, lhs.eta2, lhs.phi1, lhs.phi2);
}

std::optional<SignedMonomial> multiply(const Monomial& lhs, const Monomial& rhs) {
  if ((lhs.eta1 && rhs.eta1) || (lhs.eta2 && rhs.eta2)) return std::nullopt;
  // lhs = eta1^a eta2^b P, rhs = eta1^c eta2^d Q with P, Q even. Moving
  // eta1^c left past eta2^b costs (-1)^(b*c).
  SignedMonomial out;
  out.monomial.eta1 = static_cast<std::uint8_t>(lhs.eta1 + rhs.eta1);
  out.monomial.eta2 = static_cast<std::uint8_t>(lhs.eta2 + rhs.eta2);
  out.monomial.phi1 = lhs.phi1 + rhs.phi1;
  out.monomial.phi2 = lhs.phi2 + rhs.phi2;
  out.sign = (lhs.eta2 && rhs.eta1) ? -1 : 1;
  return out;
}

ProductGeometry::ProductGeometry(unsigned m1, unsigned m2, bool truncate, bool reduce_ring)
    : m1_(m1), m2_(m2), truncate_(truncate), reduce_ring_(reduce_ring) {
  if (m1 == 0 || m2 == 0) {
    throw GeometryError("factor half-dimensions must be at least 1 (got m1=" +
                        std::to_string(m1) + ", m2=" + std::to_string(m2) + ")");
  }
}

ProductGeometry ProductGeometry::with_truncation(bool on) const {
  ProductGeometry g = *this;
  g.truncate_ = on;
  return g;
}

ProductGeometry ProductGeometry::with_ring_reduction(bool on) const {
  ProductGeometry g = *this;
  g.reduce_ring_ = on;
  return g;
}

Form::Form(const Scalar& s) {
  if (!s.is_zero()) terms_.emplace(Monomial{}, s);
}

Form Form::generator(Generator g) { return term(Monomial::of(g), Scalar(1)); }

Form Form::term(const Monomial& m, const Scalar& s) {
  Form f;
  f.add_term(m, s);
  return f;
}

Scalar Form::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<std::uint64_t> Form::degree() const {
  if (terms_.empty()) return std::nullopt;
  const auto d = terms_.begin()->first.degree();
  for (const auto& [m, s] : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

bool Form::is_scalar() const {
  for (const auto& [m, s] : terms_) {
    if (!m.is_unit()) return false;
  }
  return true;
}

void Form::add_term(const Monomial& m, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& rhs) {
  for (const auto& [m, s] : rhs.terms_) add_term(m, s);
  return *this;
}

Form& Form::operator-=(const Form& rhs) {
  for (const auto& [m, s] : rhs.terms_) add_term(m, -s);
  return *this;
}

Form operator-(Form f) {
  for (auto& [m, s] : f.terms_) s = -s;
  return f;
}

Form add(const Form& lhs, const Form& rhs) { return lhs + rhs; }
Form negate(const Form& f) { return -f; }

Form scale(const Scalar& s, const Form& f) {
  return f.map_coefficients([&](const Scalar& c) { return s * c; });
}

Form scale(const Scalar& s, const Form& f, const ProductGeometry& geom) {
  return canonicalize(scale(s, f), geom);
}

namespace {

Form wedge_impl(const Form& lhs, const Form& rhs, const ProductGeometry* geom) {
  Form out;
  for (const auto& [ml, sl] : lhs.terms()) {
    for (const auto& [mr, sr] : rhs.terms()) {
      auto product = multiply(ml, mr);
      if (!product) continue;
      if (geom && geom->truncate() && !geom->admits(product->monomial)) continue;
      Scalar c = sl * sr;
      if (geom && geom->reduce_ring()) c = reduce_ring(c);
      if (product->sign < 0) c = -c;
      out.add_term(product->monomial, c);
    }
  }
  return out;
}

}  // namespace

Form wedge(const Form& lhs, const Form& rhs) { return wedge_impl(lhs, rhs, nullptr); }

Form wedge(const Form& lhs, const Form& rhs, const ProductGeometry& geom) {
  return wedge_impl(lhs, rhs, &geom);
}

Form power(const Form& f, unsigned k) {
  Form result(1);
  for (unsigned i = 0; i < k; ++i) result = wedge(result, f);
  return result;
}

Form power(const Form& f, unsigned k, const ProductGeometry& geom) {
  Form result = canonicalize(Form(1), geom);
  const Form base = canonicalize(f, geom);
  for (unsigned i = 0; i < k; ++i) result = wedge(result, base, geom);
  return result;
}

Form truncate(const Form& f, const ProductGeometry& geom) {
  Form out;
  for (const auto& [m, s] : f.terms()) {
    if (geom.admits(m)) out.add_term(m, s);
  }
  return out;
}

Form reduce_ring(const Form& f) {
  return f.map_coefficients([](const Scalar& s) { return reduce_ring(s); });
}

Form canonicalize(const Form& f, const ProductGeometry& geom) {
  Form out = geom.truncate() ? truncate(f, geom) : f;
  return geom.reduce_ring() ? reduce_ring(out) : out;
}

bool is_zero(const Form& f) { return f.is_zero(); }
bool equal(const Form& lhs, const Form& rhs) { return lhs == rhs; }

}  // namespace astheno
