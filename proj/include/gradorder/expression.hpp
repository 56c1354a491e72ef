#pragma once

#include "gradorder/arith.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradorder {

class ExpressionError : public std::runtime_error {
 public:
  ExpressionError(std::size_t column, const std::string& what)
      : std::runtime_error(what), column_(column) {}

  /// 1-based column inside the expression text.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Grammar (whitespace ignored):
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary | juxtaposed)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'i' | '(' expr ')'
// A primary directly following a complete factor multiplies it, so
// "20(1-i)(1-2i)" and "2i" read as written.
GaussInt evaluate_expression(std::string_view text);

}  // namespace gradorder
