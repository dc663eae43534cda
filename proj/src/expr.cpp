/* SPDX-License-Identifier: Apache-2.0 */

#include "xreal/expr.hpp"

namespace xreal {

const char* name(UnaryOp op) {
  switch (op) {
    case UnaryOp::neg: return "-";
    case UnaryOp::sin: return "sin";
    case UnaryOp::cos: return "cos";
    case UnaryOp::atan: return "atan";
    case UnaryOp::exp: return "exp";
    case UnaryOp::ln: return "ln";
    case UnaryOp::sqrt: return "sqrt";
  }
  return "?";
}

const char* name(ConstantKind k) { return k == ConstantKind::pi ? "pi" : "e"; }

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

char symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return '+';
    case BinaryOp::sub: return '-';
    case BinaryOp::mul: return '*';
    case BinaryOp::div: return '/';
  }
  return '?';
}

std::string literal_text(const Rational& q) {
  // '-' binds to a base, so a negative literal reads back as a negation
  if (q.sign() < 0) return "(-" + (-q).to_string() + ")";
  return q.is_integer() ? q.to_string() : "(" + q.to_string() + ")";
}

Expr make(decltype(Expr::Node::value) v) { return Expr(std::make_shared<const Expr::Node>(Expr::Node{std::move(v)})); }

}  // namespace

std::string Expr::to_string() const {
  return std::visit(
      Overloaded{
          [](const Literal& l) { return literal_text(l.value); },
          [](const Constant& c) { return std::string(name(c.kind)); },
          [](const Unary& u) {
            if (u.op == UnaryOp::neg) return "-(" + u.arg.to_string() + ")";
            return std::string(name(u.op)) + "(" + u.arg.to_string() + ")";
          },
          [](const Binary& b) {
            return "(" + b.lhs.to_string() + " " + symbol(b.op) + " " + b.rhs.to_string() + ")";
          },
          [](const Power& p) { return "(" + p.base.to_string() + ")^" + std::to_string(p.exponent); },
      },
      node().value);
}

namespace expr {

Expr lit(Rational q) { return make(Literal{std::move(q)}); }
Expr pi() { return make(Constant{ConstantKind::pi}); }
Expr e() { return make(Constant{ConstantKind::e}); }
Expr neg(Expr a) { return make(Unary{UnaryOp::neg, std::move(a)}); }
Expr sin(Expr a) { return make(Unary{UnaryOp::sin, std::move(a)}); }
Expr cos(Expr a) { return make(Unary{UnaryOp::cos, std::move(a)}); }
Expr atan(Expr a) { return make(Unary{UnaryOp::atan, std::move(a)}); }
Expr exp(Expr a) { return make(Unary{UnaryOp::exp, std::move(a)}); }
Expr ln(Expr a) { return make(Unary{UnaryOp::ln, std::move(a)}); }
Expr sqrt(Expr a) { return make(Unary{UnaryOp::sqrt, std::move(a)}); }
Expr add(Expr a, Expr b) { return make(Binary{BinaryOp::add, std::move(a), std::move(b)}); }
Expr sub(Expr a, Expr b) { return make(Binary{BinaryOp::sub, std::move(a), std::move(b)}); }
Expr mul(Expr a, Expr b) { return make(Binary{BinaryOp::mul, std::move(a), std::move(b)}); }
Expr div(Expr a, Expr b) { return make(Binary{BinaryOp::div, std::move(a), std::move(b)}); }
Expr pow(Expr a, std::uint64_t n) { return make(Power{std::move(a), n}); }

}  // namespace expr

}  // namespace xreal
