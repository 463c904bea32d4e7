#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sphrhs/operators.hpp"

namespace sphrhs {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Resolves a generator or structural operator name.
OperatorExpression named_operator(std::string_view name);

/// Parses operator expressions such as "K+", "[J+,J-]", "A*B", "A+B", "2.5*A".
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | primary
///   primary := number | name | '[' expr ',' expr ']' | '(' expr ')'
///
/// Names are matched longest first, so "J+M" reads as J+ followed by M and is
/// rejected; write "J+ + M" or "(J+)+M".
OperatorExpression parse_operator_expression(std::string_view text);

}  // namespace sphrhs
