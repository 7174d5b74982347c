#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "formcone/errors.hpp"
#include "formcone/polynomial.hpp"

namespace formcone {

// Syntax error with a 1-based position and the set of tokens that would
// have been accepted there.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::vector<std::string> expected);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_, column_;
  std::vector<std::string> expected_;
};

// Parses an expression over the ring's variables: + - * ^, parentheses,
// integer and rational constants, division by nonzero constants, and
// juxtaposition of a number with what follows ("3x^2"). `line` and
// `column_offset` position error reports inside a larger document.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1,
                            std::size_t column_offset = 0);

// Comma-separated list of expressions.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              std::size_t line = 1, std::size_t column_offset = 0);

bool is_identifier(std::string_view s);

}  // namespace formcone
