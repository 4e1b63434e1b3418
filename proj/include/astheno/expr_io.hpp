#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "astheno/form.hpp"

namespace astheno {

struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePosition pos, const std::string& message);

  SourcePosition position() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  SourcePosition pos_;
  std::string message_;
};

// Parses the text grammar
//
//   form   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/\') factor)*
//   factor := '-' factor | atom ('^' nat)?
//   atom   := nat ['/' nat] | a1|b1|a2|b2 | eta1|eta2|Phi1|Phi2 | '(' form ')'
//
// into a canonical form. Each '*' needs a scalar factor on one side.
Form parse(std::string_view text);

std::string print_rational(const Rational& q);
std::string print_text(const Scalar& s);
std::string print_text(const Form& f);
std::string print_latex(const Scalar& s);
std::string print_latex(const Form& f);

class RecordError : public std::runtime_error {
 public:
  RecordError(std::string path, const std::string& message);
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// {"terms": [{"eta1","eta2","phi1","phi2","coeff": [{"a1","b1","a2","b2","num","den"}]}]}
nlohmann::json to_record(const Form& f);
Form from_record(const nlohmann::json& record);

}  // namespace astheno
