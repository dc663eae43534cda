/* SPDX-License-Identifier: Apache-2.0 */

// Elementary functions. Each one is first defined on rationals as a
// certified series over a reduced domain, then lifted to reals with
// bind_prime and a modulus of continuity.

#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "xreal/rational.hpp"
#include "xreal/real.hpp"

namespace xreal {

struct ElementaryOptions {
  /// Insert compress() at the documented points: arguments of lifted
  /// functions, sin reconstruction, pi accumulation and exp squaring.
  bool compress = true;
};

enum class Reduction { triple_angle, power_of_two_scaling, power_of_two_division };

/// A rational argument moved into a function's fast domain.
struct ReducedArg {
  Rational value;
  std::int64_t count = 0;
  Reduction rule;
};

/// a / 3^k with k minimal such that |a| / 3^k <= 1.
ReducedArg reduce_sin_argument(const Rational& a);
/// q / 2^m in [1/2, 2] (m = 0 when q already is). Requires q > 0.
ReducedArg reduce_ln_argument(const Rational& q);
/// a / 2^k with 2^k >= ceil(|a| + 2), so the result lies in (-1, 1).
ReducedArg reduce_exp_argument(const Rational& a);

Real sin_q(const Rational& a, const ElementaryOptions& opts = {});
Real sin(const Real& x, const ElementaryOptions& opts = {});
/// 1 - 2 sin^2(x / 2)
Real cos(const Real& x, const ElementaryOptions& opts = {});

/// arctan on [-1, 1]. Throws std::domain_error outside it.
Real atan_q(const Rational& a);
/// arctan on all of Q, using pi/2 - atan(1/a) for |a| > 1.
Real atan_q_total(const Rational& a, const ElementaryOptions& opts = {});
Real atan(const Real& x, const ElementaryOptions& opts = {});

struct ArctanTerm {
  std::int64_t coefficient;
  Rational argument;
};

/// pi = 176 atan(1/57) + 28 atan(1/239) - 48 atan(1/682) + 96 atan(1/12943)
std::span<const ArctanTerm> pi_formula();
Real pi(const ElementaryOptions& opts = {});

/// Iterates b -> (a + b) / (1 - a b) n times from `start`, requiring every
/// value fed into the map to lie in ]-1, 1[. On success the result r
/// satisfies atan(start) + n atan(a) = atan(r). Requires -1 < a < 1.
std::optional<Rational> arctan_multiple_check(const Rational& a, std::uint64_t n, const Rational& start = 0);

/// Inverse hyperbolic tangent for |a| <= 1/3.
Real artanh_q(const Rational& a);
/// 2 artanh(1/3)
Real ln2();
/// Natural log of a rational in [1/2, 2] via 2 artanh((q - 1) / (q + 1)).
Real ln_q(const Rational& q);
/// Throws ContractViolation if an approximation contradicts the witness.
Real ln(const Real& x, const PositivityWitness& w, const ElementaryOptions& opts = {});

/// exp on (-1, 1). Throws std::domain_error outside it.
Real exp_q(const Rational& a);
Real exp(const Real& x, const ElementaryOptions& opts = {});
/// exp(1)
Real euler(const ElementaryOptions& opts = {});

/// Approximations of sqrt(max(a, 0)).
Real sqrt_q(const Rational& a);
/// Total square root; negative inputs map to 0.
Real sqrt(const Real& x);

}  // namespace xreal
