#include "gradorder/expression.hpp"

#include <cctype>

namespace gradorder {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GaussInt parse() {
    GaussInt v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ExpressionError(pos_ + 1, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == '(';
  }

  GaussInt expr() {
    GaussInt v = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  GaussInt term() {
    GaussInt v = unary();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        v *= unary();
      } else if (starts_primary()) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  GaussInt unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  GaussInt power() {
    GaussInt base = primary();
    if (peek() != '^') return base;
    ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a nonnegative integer");
    Integer e = integer();
    if (e > 4096) fail("exponent too large");
    return pow(base, e.convert_to<unsigned long>());
  }

  GaussInt primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      GaussInt v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 'i') {
      ++pos_;
      return GaussInt::unit_i();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return GaussInt(integer());
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GaussInt evaluate_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace gradorder
