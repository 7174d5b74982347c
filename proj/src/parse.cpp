#include "formcone/parse.hpp"

#include <cctype>

namespace formcone {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& e : v) s += (s.empty() ? "" : ", ") + e;
  return s;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string message,
                       std::vector<std::string> expected)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                 message + (expected.empty() ? "" : " (expected " + join(expected) + ")")),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t offset)
      : text_(text), ring_(ring), line_(line), offset_(offset) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'", {"+", "-", "*", "^", "end of expression"});
    return p;
  }

  std::vector<Polynomial> parse_list() {
    std::vector<Polynomial> out;
    out.push_back(expr());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      out.push_back(expr());
      skip_ws();
    }
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'", {",", "+", "-", "*", "^", "end of line"});
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) {
    throw ParseError(line_, offset_ + pos_ + 1, msg, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division only by nonzero constants", {"nonzero constant"});
        }
        acc = acc.scale(ring_->field().inv(d.lead_coef()));
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("missing exponent", {"natural number"});
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 65535) fail("exponent too large", {});
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression", {"number", "variable", "("});
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("unbalanced parenthesis", {")"});
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class v(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, mpq_class(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'", ring_->names());
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'", {"number", "variable", "("});
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_, offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line,
                            std::size_t column_offset) {
  return ExprParser(text, ring, line, column_offset).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              std::size_t line, std::size_t column_offset) {
  return ExprParser(text, ring, line, column_offset).parse_list();
}

}  // namespace formcone
