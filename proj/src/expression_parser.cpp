#include "sphrhs/expression_parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "sphrhs/so32_algebra.hpp"
#include "sphrhs/structural_ops.hpp"

namespace sphrhs {

OperatorExpression named_operator(std::string_view name) {
  for (const auto& g : generator_names()) {
    if (g == name) return generator(name);
  }
  for (const auto& s : structural_names()) {
    if (s == name) return structural_operator(name);
  }
  throw std::invalid_argument("unknown operator '" + std::string(name) + "'");
}

namespace {

// Either a pure scalar or an operator.
struct Value {
  std::optional<complex> scalar;
  std::optional<OperatorExpression> op;

  OperatorExpression as_operator() const {
    if (op) return *op;
    return *scalar * OperatorExpression::identity();
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OperatorExpression parse() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v.as_operator();
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Value expr() {
    Value acc = term();
    while (true) {
      if (accept('+')) {
        acc = add(acc, term(), 1.0);
      } else if (accept('-')) {
        acc = add(acc, term(), -1.0);
      } else {
        return acc;
      }
    }
  }

  static Value add(const Value& a, const Value& b, double sign) {
    if (a.scalar && b.scalar) return {*a.scalar + sign * *b.scalar, std::nullopt};
    if (sign > 0) return {std::nullopt, a.as_operator() + b.as_operator()};
    return {std::nullopt, a.as_operator() - b.as_operator()};
  }

  Value term() {
    Value acc = unary();
    while (accept('*')) {
      const Value rhs = unary();
      if (acc.scalar && rhs.scalar) {
        acc = {*acc.scalar * *rhs.scalar, std::nullopt};
      } else if (acc.scalar) {
        acc = {std::nullopt, *acc.scalar * *rhs.op};
      } else if (rhs.scalar) {
        acc = {std::nullopt, *rhs.scalar * *acc.op};
      } else {
        acc = {std::nullopt, *acc.op * *rhs.op};
      }
    }
    return acc;
  }

  Value unary() {
    if (accept('-')) {
      const Value v = unary();
      if (v.scalar) return {-*v.scalar, std::nullopt};
      return {std::nullopt, complex{-1.0} * *v.op};
    }
    return primary();
  }

  Value primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      const Value a = expr();
      expect(',');
      const Value b = expr();
      expect(']');
      return {std::nullopt, commutator(a.as_operator(), b.as_operator())};
    }
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Value number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
            text_[pos_] == 'e' || text_[pos_] == 'E' ||
            ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
             (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
      ++pos_;
    }
    double value = 0.0;
    const auto* first = text_.data() + start;
    const auto* last = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      pos_ = start;
      fail("malformed number");
    }
    return {complex{value}, std::nullopt};
  }

  Value name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string ident(text_.substr(start, pos_ - start));
    const bool signed_family =
        ident == "J" || ident == "K" || ident == "R" || ident == "S" || ident == "sinExp";
    if (signed_family) {
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        ident += text_[pos_++];
      } else {
        fail("operator '" + ident + "' needs a '+' or '-' suffix");
      }
    }
    try {
      return {std::nullopt, named_operator(ident)};
    } catch (const std::invalid_argument&) {
      pos_ = start;
      fail("unknown operator '" + ident + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OperatorExpression parse_operator_expression(std::string_view text) {
  return Parser(text).parse();
}

}  // namespace sphrhs
