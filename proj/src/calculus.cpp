#include "astheno/calculus.hpp"

#include "astheno/fixtures.hpp"

namespace astheno {

std::string_view to_string(LeibnizConvention c) {
  return c == LeibnizConvention::graded ? "graded" : "ungraded";
}

std::string_view to_string(ConditionKind k) {
  switch (k) {
    case ConditionKind::astheno: return "astheno";
    case ConditionKind::skt: return "skt";
    case ConditionKind::gauduchon: return "gauduchon";
  }
  return "?";
}

std::optional<LeibnizConvention> parse_convention(std::string_view s) {
  if (s == "graded") return LeibnizConvention::graded;
  if (s == "ungraded") return LeibnizConvention::ungraded;
  return std::nullopt;
}

std::optional<ConditionKind> parse_condition(std::string_view s) {
  if (s == "astheno") return ConditionKind::astheno;
  if (s == "skt") return ConditionKind::skt;
  if (s == "gauduchon") return ConditionKind::gauduchon;
  return std::nullopt;
}

namespace {

Form gen(Generator g) { return Form::generator(g); }

Form word(std::uint8_t eta1, std::uint8_t eta2, std::uint32_t phi1, std::uint32_t phi2) {
  Monomial m;
  m.eta1 = eta1;
  m.eta2 = eta2;
  m.phi1 = phi1;
  m.phi2 = phi2;
  return Form::term(m, Scalar(1));
}

Form param(Param p) { return Form(Scalar::parameter(p)); }

// d of the canonical word eta1^a eta2^b Phi1^p Phi2^q, one letter at a time.
// The Phi blocks contribute p (resp. q) identical terms because everything
// to their left except the etas is even.
Form d_monomial(const Monomial& m, LeibnizConvention conv) {
  const bool graded = conv == LeibnizConvention::graded;
  Form out;
  if (m.eta1) {
    out += wedge(wedge(param(Param::alpha1), gen(Generator::phi1)),
                 word(0, m.eta2, m.phi1, m.phi2));
  }
  if (m.eta2) {
    Form t = wedge(word(m.eta1, 0, 0, 0),
                   wedge(wedge(param(Param::alpha2), gen(Generator::phi2)),
                         word(0, 0, m.phi1, m.phi2)));
    out += (graded && m.eta1) ? -t : t;
  }
  const int eta_sign = (graded && (m.eta1 + m.eta2) % 2 == 1) ? -1 : 1;
  if (m.phi1 > 0) {
    const Scalar c = Scalar(2 * eta_sign) * Scalar(static_cast<long long>(m.phi1)) *
                     Scalar::parameter(Param::beta1);
    out += wedge(word(m.eta1, m.eta2, 0, 0),
                 wedge(Form(c), word(1, 0, m.phi1, m.phi2)));
  }
  if (m.phi2 > 0) {
    const Scalar c = Scalar(2 * eta_sign) * Scalar(static_cast<long long>(m.phi2)) *
                     Scalar::parameter(Param::beta2);
    out += wedge(word(m.eta1, m.eta2, 0, 0),
                 wedge(Form(c), word(0, 1, m.phi1, m.phi2)));
  }
  return out;
}

}  // namespace

Form exterior_d(const Form& f, LeibnizConvention conv) {
  Form out;
  for (const auto& [m, s] : f.terms()) out += scale(s, d_monomial(m, conv));
  return out;
}

Form exterior_d(const Form& f, LeibnizConvention conv, const ProductGeometry& geom) {
  return canonicalize(exterior_d(f, conv), geom);
}

Form j_action(const Form& f) {
  Form out;
  for (const auto& [m, s] : f.terms()) {
    Form image(s);
    if (m.eta1) image = wedge(image, gen(Generator::eta2));
    if (m.eta2) image = wedge(image, -gen(Generator::eta1));
    out += wedge(image, word(0, 0, m.phi1, m.phi2));
  }
  return out;
}

Form d_c(const Form& f, LeibnizConvention conv) { return j_action(exterior_d(f, conv)); }

Form d_c(const Form& f, LeibnizConvention conv, const ProductGeometry& geom) {
  return canonicalize(j_action(exterior_d(f, conv, geom)), geom);
}

Form kahler_form() {
  return gen(Generator::phi1) + gen(Generator::phi2) -
         scale(Scalar(2), wedge(gen(Generator::eta1), gen(Generator::eta2)));
}

Form ddc_power_direct(unsigned k, const ProductGeometry& geom, LeibnizConvention conv) {
  const Form omega_k = power(kahler_form(), k, geom);
  return exterior_d(d_c(omega_k, conv, geom), conv, geom);
}

Form ddc_power_expansion(unsigned k, const ProductGeometry& geom, LeibnizConvention conv) {
  if (k < 2) throw std::invalid_argument("expansion needs k >= 2");
  const Form omega = canonicalize(kahler_form(), geom);
  const Form d_omega = exterior_d(omega, conv, geom);
  const Form dc_omega = d_c(omega, conv, geom);
  const Form ddc_omega = exterior_d(dc_omega, conv, geom);
  Form bracket = wedge(ddc_omega, omega, geom) +
                 scale(Scalar(static_cast<long long>(k) - 1), wedge(d_omega, dc_omega, geom));
  return scale(Scalar(static_cast<long long>(k)), wedge(bracket, power(omega, k - 2, geom), geom),
               geom);
}

unsigned minimum_dimension(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::astheno: return 3;
    case ConditionKind::gauduchon: return 2;
    case ConditionKind::skt: return 1;
  }
  return 1;
}

Form condition_tensor(ConditionKind kind, const ProductGeometry& geom, LeibnizConvention conv) {
  const unsigned m = geom.m();
  if (m < minimum_dimension(kind)) {
    throw GeometryError(std::string(to_string(kind)) + " needs complex dimension >= " +
                        std::to_string(minimum_dimension(kind)));
  }
  switch (kind) {
    case ConditionKind::skt: return ddc_power_direct(1, geom, conv);
    case ConditionKind::gauduchon: return ddc_power_direct(m - 1, geom, conv);
    case ConditionKind::astheno: break;
  }
  if (m == 3) return ddc_power_direct(1, geom, conv);
  Form expanded = ddc_power_expansion(m - 2, geom, conv);
  if (conv == LeibnizConvention::ungraded) return expanded;
  if (ddc_power_direct(m - 2, geom, conv) != expanded) {
    throw InconsistencyError("direct and expanded astheno tensors differ for m1=" +
                             std::to_string(geom.m1()) + ", m2=" + std::to_string(geom.m2()));
  }
  return expanded;
}

namespace {

IdentityComparison compare(Form computed, const Form& printed, const ProductGeometry& geom) {
  IdentityComparison c;
  c.computed = std::move(computed);
  c.expected = canonicalize(printed, geom);
  c.diff = c.computed - c.expected;
  return c;
}

}  // namespace

WedgeIdentityReport wedge_identity_check(const ProductGeometry& geom, LeibnizConvention conv) {
  if (geom.m() < 4) throw GeometryError("wedge identities need complex dimension >= 4");
  const auto& fx = embedded_fixtures();
  const Form omega = canonicalize(kahler_form(), geom);
  const Form d_omega = exterior_d(omega, conv, geom);
  const Form dc_omega = d_c(omega, conv, geom);
  const Form ddc_omega = exterior_d(dc_omega, conv, geom);
  WedgeIdentityReport r;
  r.d_wedge_dc = compare(wedge(d_omega, dc_omega, geom), fx.equation("d_omega_wedge_dc_omega").printed.form, geom);
  r.ddc_wedge_omega =
      compare(wedge(ddc_omega, omega, geom), fx.equation("ddc_omega_wedge_omega").printed.form, geom);
  return r;
}

}  // namespace astheno
