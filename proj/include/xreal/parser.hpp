/* SPDX-License-Identifier: Apache-2.0 */

// Concrete syntax:
//
//   expr     := term (('+' | '-') term)*
//   term     := factor (('*' | '/') factor)*
//   factor   := base ('^' unsigned-int)?
//   base     := rational | 'pi' | 'e' | fn '(' expr ')' | '(' expr ')' | '-' base
//   fn       := sin | cos | atan | exp | ln | sqrt
//   rational := int ('/' unsigned-int)? | decimal-literal
//
// Decimal literals are exact. Note that "2/3^2" reads as (2/3)^2 since
// int '/' int is a single literal.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "xreal/expr.hpp"

namespace xreal {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);

  /// Byte offset into the input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Expr parse_expr(std::string_view text);

enum class Comparison { less, greater };

struct Inequality {
  Expr lhs;
  Comparison op;
  Expr rhs;
};

/// "<lhs> < <rhs>" or "<lhs> > <rhs>".
Inequality parse_inequality(std::string_view text);

}  // namespace xreal
