#include "astheno/expr_io.hpp"

#include <cctype>
#include <set>
#include <utility>
#include <vector>

namespace astheno {

ParseError::ParseError(SourcePosition pos, const std::string& message)
    : std::runtime_error("line " + std::to_string(pos.line) + ", column " +
                         std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(message) {}

RecordError::RecordError(std::string path, const std::string& message)
    : std::runtime_error((path.empty() ? std::string("/") : path) + ": " + message),
      path_(std::move(path)) {}

namespace {

// ---------------------------------------------------------------- lexing

enum class Tok { number, ident, plus, minus, star, wedge, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  SourcePosition pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end: return "end of input";
    case Tok::number: return "number '" + t.text + "'";
    case Tok::ident: return "identifier '" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  SourcePosition pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const SourcePosition start = pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::number, std::string(text.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::ident, std::string(text.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '\\') {
      out.push_back({Tok::wedge, "/\\", start});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default: {
        if (static_cast<unsigned char>(c) >= 0x80) {
          throw ParseError(start, "unexpected non-ASCII character");
        }
        throw ParseError(start, std::string("unexpected character '") + c + "'");
      }
    }
    out.push_back({kind, std::string(1, c), start});
    advance(1);
  }
  out.push_back({Tok::end, "", pos});
  return out;
}

// ---------------------------------------------------------------- parsing

constexpr unsigned long kMaxExponent = 1000;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Form parse_all() {
    Form f = form();
    if (peek().kind != Tok::end) {
      throw ParseError(peek().pos, "unexpected " + describe(peek()));
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  Form form() {
    bool negative = false;
    if (accept(Tok::minus)) {
      negative = true;
    } else {
      accept(Tok::plus);
    }
    Form acc = term();
    if (negative) acc = -acc;
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = take().kind == Tok::minus;
      Form rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Form term() {
    Form acc = factor();
    bool prev_scalar = acc.is_scalar();
    while (peek().kind == Tok::star || peek().kind == Tok::wedge) {
      const Token op = take();
      Form rhs = factor();
      // '*' binds two adjacent factors, one of which must be a scalar.
      if (op.kind == Tok::star && !prev_scalar && !rhs.is_scalar()) {
        throw ParseError(op.pos, "'*' needs a scalar operand; use '/\\' to wedge forms");
      }
      prev_scalar = rhs.is_scalar();
      acc = wedge(acc, rhs);
    }
    return acc;
  }

  Form factor() {
    if (accept(Tok::minus)) return -factor();
    Form base = atom();
    if (peek().kind == Tok::caret) {
      take();
      if (peek().kind == Tok::minus) throw ParseError(peek().pos, "negative exponent");
      const Token& n = take();
      if (n.kind != Tok::number) {
        throw ParseError(n.pos, "expected exponent, found " + describe(n));
      }
      if (n.text.size() > 6 || std::stoul(n.text) > kMaxExponent) {
        throw ParseError(n.pos, "exponent exceeds " + std::to_string(kMaxExponent));
      }
      base = power(base, static_cast<unsigned>(std::stoul(n.text)));
    }
    return base;
  }

  Form atom() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::number: {
        Rational value{Integer(t.text)};
        if (accept(Tok::slash)) {
          const Token& d = take();
          if (d.kind != Tok::number) {
            throw ParseError(d.pos, "expected denominator, found " + describe(d));
          }
          const Integer den(d.text);
          if (den == 0) throw ParseError(d.pos, "zero denominator");
          value /= Rational(den);
        }
        return Form(Scalar(value));
      }
      case Tok::ident: {
        if (auto p = param_from_name(t.text)) return Form(Scalar::parameter(*p));
        if (t.text == "eta1") return Form::generator(Generator::eta1);
        if (t.text == "eta2") return Form::generator(Generator::eta2);
        if (t.text == "Phi1") return Form::generator(Generator::phi1);
        if (t.text == "Phi2") return Form::generator(Generator::phi2);
        throw ParseError(t.pos, "unknown identifier '" + t.text + "'");
      }
      case Tok::lparen: {
        Form inner = form();
        const Token& close = take();
        if (close.kind != Tok::rparen) {
          throw ParseError(close.pos, "expected ')', found " + describe(close));
        }
        return inner;
      }
      default:
        throw ParseError(t.pos, "unexpected " + describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- printing

std::string exponent_suffix(std::uint64_t e, bool latex) {
  if (e == 1) return "";
  const std::string digits = std::to_string(e);
  if (latex && digits.size() > 1) return "^{" + digits + "}";
  return "^" + digits;
}

std::string param_word(const Exponents& e, bool latex) {
  std::string out;
  for (Param p : kParams) {
    const auto k = e[slot(p)];
    if (k == 0) continue;
    if (!latex && !out.empty()) out += "*";
    out += latex ? std::string(param_latex(p)) : std::string(param_name(p));
    out += exponent_suffix(k, latex);
  }
  return out;
}

std::string generator_word(const Monomial& m, bool latex) {
  std::string out;
  const std::string sep = latex ? "\\wedge" : "/\\";
  auto append = [&](const char* text_name, const char* latex_name, std::uint64_t k) {
    if (k == 0) return;
    if (!out.empty()) out += sep;
    out += latex ? latex_name : text_name;
    out += exponent_suffix(k, latex);
  };
  append("eta1", "\\eta_1", m.eta1);
  append("eta2", "\\eta_2", m.eta2);
  append("Phi1", "\\Phi_1", m.phi1);
  append("Phi2", "\\Phi_2", m.phi2);
  return out;
}

std::string rational_magnitude(const Rational& q, bool latex) {
  const Rational a = abs(q);
  if (!latex || denominator(a) == 1) return print_rational(a);
  return "\\frac{" + numerator(a).str() + "}{" + denominator(a).str() + "}";
}

// One signed summand, printed without its sign.
struct Piece {
  bool negative;
  std::string body;
};

std::string join(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      out += pieces[i].negative ? "-" : "";
    } else {
      out += pieces[i].negative ? " - " : " + ";
    }
    out += pieces[i].body;
  }
  return out;
}

Piece scalar_piece(const Exponents& e, const Rational& c, const std::string& tail, bool latex) {
  const std::string params = param_word(e, latex);
  std::vector<std::string> parts;
  if (abs(c) != 1 || (params.empty() && tail.empty())) parts.push_back(rational_magnitude(c, latex));
  if (!params.empty()) parts.push_back(params);
  std::string body;
  for (const auto& part : parts) {
    if (!body.empty() && !latex) body += "*";
    body += part;
  }
  if (!tail.empty()) {
    if (!body.empty()) body += latex ? "\\," : "*";
    body += tail;
  }
  return {c < 0, body};
}

std::string print_scalar(const Scalar& s, bool latex) {
  std::vector<Piece> pieces;
  for (const auto& [e, c] : s.terms()) pieces.push_back(scalar_piece(e, c, "", latex));
  return join(pieces);
}

std::string print_form(const Form& f, bool latex) {
  std::vector<Piece> pieces;
  for (const auto& [m, s] : f.terms()) {
    const std::string gens = generator_word(m, latex);
    if (s.size() == 1 || gens.empty()) {
      for (const auto& [e, c] : s.terms()) pieces.push_back(scalar_piece(e, c, gens, latex));
      continue;
    }
    std::string body = latex ? "\\left(" + print_scalar(s, true) + "\\right)"
                             : "(" + print_scalar(s, false) + ")";
    if (!gens.empty()) body += (latex ? "\\," : "*") + gens;
    pieces.push_back({false, body});
  }
  return join(pieces);
}

// ---------------------------------------------------------------- records

using nlohmann::json;

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw RecordError(path, "missing field '" + key + "'");
  return *it;
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> keys,
                    const std::string& path) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (auto allowed : keys) known = known || k == allowed;
    if (!known) throw RecordError(path + "/" + k, "unknown field");
  }
}

std::uint64_t read_nat(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw RecordError(path, "expected a non-negative integer");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const auto x = v.get<std::int64_t>();
  if (x < 0) throw RecordError(path, "expected a non-negative integer");
  return static_cast<std::uint64_t>(x);
}

std::uint32_t read_u32(const json& v, const std::string& path) {
  const auto x = read_nat(v, path);
  if (x > std::numeric_limits<std::uint32_t>::max()) throw RecordError(path, "exponent too large");
  return static_cast<std::uint32_t>(x);
}

Integer read_integer(const json& v, const std::string& path) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool ok = s.size() > start;
    for (std::size_t i = start; i < s.size(); ++i) {
      ok = ok && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    if (ok) return Integer(s);
  }
  throw RecordError(path, "expected an integer");
}

std::uint8_t read_bit(const json& v, const std::string& path) {
  const auto x = read_nat(v, path);
  if (x > 1) throw RecordError(path, "expected 0 or 1");
  return static_cast<std::uint8_t>(x);
}

}  // namespace

Form parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

std::string print_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string print_text(const Scalar& s) { return print_scalar(s, false); }
std::string print_text(const Form& f) { return print_form(f, false); }
std::string print_latex(const Scalar& s) { return print_scalar(s, true); }
std::string print_latex(const Form& f) { return print_form(f, true); }

json to_record(const Form& f) {
  json terms = json::array();
  for (const auto& [m, s] : f.terms()) {
    json coeff = json::array();
    for (const auto& [e, c] : s.terms()) {
      coeff.push_back({{"a1", e[slot(Param::alpha1)]},
                       {"b1", e[slot(Param::beta1)]},
                       {"a2", e[slot(Param::alpha2)]},
                       {"b2", e[slot(Param::beta2)]},
                       {"num", integer_json(numerator(c))},
                       {"den", integer_json(denominator(c))}});
    }
    terms.push_back({{"eta1", m.eta1},
                     {"eta2", m.eta2},
                     {"phi1", m.phi1},
                     {"phi2", m.phi2},
                     {"coeff", std::move(coeff)}});
  }
  return json{{"terms", std::move(terms)}};
}

Form from_record(const json& record) {
  if (!record.is_object()) throw RecordError("", "expected an object");
  reject_unknown(record, {"terms"}, "");
  const json& terms = require(record, "terms", "");
  if (!terms.is_array()) throw RecordError("/terms", "expected an array");

  Form out;
  std::set<Monomial> seen;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "/terms/" + std::to_string(i);
    const json& t = terms[i];
    if (!t.is_object()) throw RecordError(path, "expected an object");
    reject_unknown(t, {"eta1", "eta2", "phi1", "phi2", "coeff"}, path);
    Monomial m;
    m.eta1 = read_bit(require(t, "eta1", path), path + "/eta1");
    m.eta2 = read_bit(require(t, "eta2", path), path + "/eta2");
    m.phi1 = read_u32(require(t, "phi1", path), path + "/phi1");
    m.phi2 = read_u32(require(t, "phi2", path), path + "/phi2");
    if (!seen.insert(m).second) throw RecordError(path, "duplicate monomial");

    const json& coeff = require(t, "coeff", path);
    if (!coeff.is_array()) throw RecordError(path + "/coeff", "expected an array");
    if (coeff.empty()) throw RecordError(path + "/coeff", "zero coefficient");
    Scalar s;
    std::set<Exponents> seen_exponents;
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      const std::string cpath = path + "/coeff/" + std::to_string(j);
      const json& c = coeff[j];
      if (!c.is_object()) throw RecordError(cpath, "expected an object");
      reject_unknown(c, {"a1", "b1", "a2", "b2", "num", "den"}, cpath);
      Exponents e{};
      for (Param p : kParams) {
        const std::string key(param_name(p));
        e[slot(p)] = read_u32(require(c, key, cpath), cpath + "/" + key);
      }
      if (!seen_exponents.insert(e).second) throw RecordError(cpath, "duplicate exponent vector");
      const Integer num = read_integer(require(c, "num", cpath), cpath + "/num");
      const Integer den = read_integer(require(c, "den", cpath), cpath + "/den");
      if (num == 0) throw RecordError(cpath + "/num", "zero coefficient");
      if (den <= 0) throw RecordError(cpath + "/den", "denominator must be positive");
      s.add_term(e, Rational(num, den));
    }
    out.add_term(m, s);
  }
  return out;
}

}  // namespace astheno
