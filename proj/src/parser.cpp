/* SPDX-License-Identifier: Apache-2.0 */

#include "xreal/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace xreal {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, offset_ + pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<char> peek() {
    skip_space();
    if (pos_ == text_.size()) return std::nullopt;
    return text_[pos_];
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+'))
        lhs = expr::add(std::move(lhs), parse_term());
      else if (accept('-'))
        lhs = expr::sub(std::move(lhs), parse_term());
      else
        return lhs;
    }
  }

  Expr parse_term() {
    Expr lhs = parse_factor();
    for (;;) {
      if (accept('*'))
        lhs = expr::mul(std::move(lhs), parse_factor());
      else if (accept('/'))
        lhs = expr::div(std::move(lhs), parse_factor());
      else
        return lhs;
    }
  }

  Expr parse_factor() {
    Expr base = parse_base();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    const std::string_view n = digits();
    if (n.empty()) fail("expected an unsigned integer exponent");
    const Integer value = parse_integer(n);
    if (value > Integer(std::numeric_limits<unsigned long>::max())) {
      pos_ = at;
      fail("exponent too large");
    }
    return expr::pow(std::move(base), value.get_ui());
  }

  Expr parse_base() {
    const auto c = peek();
    if (!c) fail("unexpected end of input");
    if (*c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (*c == '-') {
      ++pos_;
      return expr::neg(parse_base());
    }
    if (is_digit(*c) || *c == '.') return parse_rational();
    if (is_alpha(*c)) return parse_identifier();
    fail("unexpected '" + std::string(1, *c) + "'");
  }

  Expr parse_rational() {
    const std::size_t start = pos_;
    const std::string_view whole = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::string_view frac = digits();
      if (frac.empty()) fail("expected digits after '.'");
      return expr::lit(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (whole.empty()) fail("expected a number");
    // int '/' unsigned-int is one literal
    const std::size_t after_int = pos_;
    if (accept('/')) {
      skip_space();
      const std::size_t den_at = pos_;
      const std::string_view den = digits();
      if (!den.empty()) {
        if (parse_integer(den) == 0) {
          pos_ = den_at;
          fail("zero denominator in literal");
        }
        return expr::lit(Rational(parse_integer(whole), parse_integer(den)));
      }
      pos_ = after_int;  // plain division by a non-literal
    }
    return expr::lit(Rational(parse_integer(whole)));
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_alpha(text_[pos_])) ++pos_;
    const std::string_view id = text_.substr(start, pos_ - start);
    if (id == "pi") return expr::pi();
    if (id == "e") return expr::e();

    Expr (*fn)(Expr) = nullptr;
    if (id == "sin") fn = expr::sin;
    else if (id == "cos") fn = expr::cos;
    else if (id == "atan") fn = expr::atan;
    else if (id == "exp") fn = expr::exp;
    else if (id == "ln") fn = expr::ln;
    else if (id == "sqrt") fn = expr::sqrt;
    if (fn == nullptr) {
      pos_ = start;
      fail("unknown identifier '" + std::string(id) + "'");
    }
    expect('(');
    Expr arg = parse_expr();
    expect(')');
    return fn(std::move(arg));
  }
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text, 0).parse_all(); }

Inequality parse_inequality(std::string_view text) {
  const std::size_t at = text.find_first_of("<>");
  if (at == std::string_view::npos) throw ParseError("expected '<' or '>'", text.size());
  if (text.find_first_of("<>", at + 1) != std::string_view::npos)
    throw ParseError("more than one comparison", text.find_first_of("<>", at + 1));
  return Inequality{Parser(text.substr(0, at), 0).parse_all(), text[at] == '<' ? Comparison::less : Comparison::greater,
                    Parser(text.substr(at + 1), at + 1).parse_all()};
}

}  // namespace xreal
