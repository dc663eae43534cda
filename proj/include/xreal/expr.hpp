/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "xreal/rational.hpp"

namespace xreal {

enum class ConstantKind { pi, e };
enum class UnaryOp { neg, sin, cos, atan, exp, ln, sqrt };
enum class BinaryOp { add, sub, mul, div };

/// Immutable closed real expression. Copies share structure.
class Expr {
 public:
  struct Node;

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  const Node& node() const { return *node_; }
  const Node* identity() const { return node_.get(); }

  /// Fully parenthesised form accepted by parse_expr.
  std::string to_string() const;

 private:
  std::shared_ptr<const Node> node_;
};

struct Literal {
  Rational value;
};

struct Constant {
  ConstantKind kind;
};

struct Unary {
  UnaryOp op;
  Expr arg;
};

struct Binary {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};

struct Power {
  Expr base;
  std::uint64_t exponent;
};

struct Expr::Node {
  std::variant<Literal, Constant, Unary, Binary, Power> value;
};

const char* name(UnaryOp op);
const char* name(ConstantKind k);

namespace expr {

Expr lit(Rational q);
Expr pi();
Expr e();
Expr neg(Expr a);
Expr sin(Expr a);
Expr cos(Expr a);
Expr atan(Expr a);
Expr exp(Expr a);
Expr ln(Expr a);
Expr sqrt(Expr a);
Expr add(Expr a, Expr b);
Expr sub(Expr a, Expr b);
Expr mul(Expr a, Expr b);
Expr div(Expr a, Expr b);
Expr pow(Expr a, std::uint64_t n);

}  // namespace expr

}  // namespace xreal
