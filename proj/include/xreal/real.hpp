/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "xreal/completion.hpp"
#include "xreal/rational.hpp"

namespace xreal {

/// A real number is a regular function of rationals.
using Real = RegularFn<Rational>;

/// Raised when a caller-supplied certificate turns out to be false, e.g. a
/// positivity witness contradicted by an approximation.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// unit(epsilon) <= x.
struct PositivityWitness {
  PosTol epsilon;
};

/// x <= -epsilon.
struct NegativityWitness {
  PosTol epsilon;
};

struct Inconclusive {};

/// Result of the halving search for the sign of a real.
struct SignSearch {
  std::variant<PositivityWitness, NegativityWitness, Inconclusive> outcome;
  std::vector<PosTol> probes;  // tolerances queried, in order

  bool is_positive() const { return std::holds_alternative<PositivityWitness>(outcome); }
  bool is_negative() const { return std::holds_alternative<NegativityWitness>(outcome); }
  bool is_inconclusive() const { return std::holds_alternative<Inconclusive>(outcome); }
};

inline Real constant(const Rational& q) { return unit(q); }

/// eps / 2^k with 2^k the smallest power of two >= c. Requires c > 0.
PosTol shrink_by(const PosTol& eps, const Rational& c);

Real add(const Real& x, const Real& y);
Real neg(const Real& x);
Real sub(const Real& x, const Real& y);
Real scale(const Rational& q, const Real& x);
Real sq(const Real& x);
/// Bound for the clamp comes from y.query(1), the one for x from x.query(1).
Real mul(const Real& x, const Real& y);
/// x^n with the clamp bound |x.query(1)| + 1.
Real pow(const Real& x, std::uint64_t n);
/// Passes x through, throwing ContractViolation when an answer a at tolerance
/// d has a < c - d (so x >= c is false).
Real require_at_least(const Real& x, const Rational& c);

/// Throws ContractViolation when an approximation contradicts the witness.
Real inv(const Real& x, const PositivityWitness& w);
Real inv(const Real& x, const NegativityWitness& w);

Real abs(const Real& x);
Real min(const Real& x, const Real& y);
Real max(const Real& x, const Real& y);

/// Re-approximates at half tolerance and snaps to a nearby dyadic rational.
Real compress(const Real& x);

/// Refuted iff x.query(eps) < -eps. A consistent answer is not a proof of x >= 0.
Verdict check_nonneg_at(const Real& x, const PosTol& eps);

/// Probes delta0, delta0/2, ... (max_iters probes). Returns a positivity
/// witness x.query(d) - d when that is positive, a negativity witness when
/// x.query(d) + d < 0, and Inconclusive if neither happens.
SignSearch find_positivity_witness(const Real& x, const PosTol& delta0, std::size_t max_iters);

/// Sign search on y - x.
SignSearch lt(const Real& x, const Real& y, const PosTol& delta0, std::size_t max_iters);

/// Fixed-point decimal with `digits` fractional digits, within 10^-digits of x.
std::string to_decimal(const Real& x, std::size_t digits);

inline Real operator+(const Real& x, const Real& y) { return add(x, y); }
inline Real operator-(const Real& x, const Real& y) { return sub(x, y); }
inline Real operator-(const Real& x) { return neg(x); }
inline Real operator*(const Real& x, const Real& y) { return mul(x, y); }

}  // namespace xreal
