/* SPDX-License-Identifier: Apache-2.0 */

#include "xreal/real.hpp"

#include <string>

namespace xreal {

namespace {

using RatFn = UcFn<Rational, Rational>;
using CurriedRatFn = UcFn<Rational, RatFn>;

const PosTol& one() {
  static const PosTol tol(Rational(1));
  return tol;
}

/// |x| <= |x(1)| + 1 for every regular x.
Rational bound_of(const Real& x) { return abs(x.query(one())) + 1; }

Real lift(std::function<Rational(const Rational&)> f, std::function<ExtTol(const PosTol&)> mu, const Real& x) {
  return map_prime(RatFn{std::move(f), std::move(mu)}, x);
}

/// Lifts a 1-Lipschitz binary rational operation.
Real lift_lipschitz2(std::function<Rational(const Rational&, const Rational&)> op, const Real& x, const Real& y) {
  CurriedRatFn f{
      [op](const Rational& a) {
        return RatFn{[op, a](const Rational& b) { return op(a, b); }, identity_modulus()};
      },
      identity_modulus()};
  return map2(std::move(f), x, y);
}

}  // namespace

PosTol shrink_by(const PosTol& eps, const Rational& c) { return eps.times_pow2(-ceil_log2(c)); }

Real add(const Real& x, const Real& y) {
  return lift_lipschitz2([](const Rational& a, const Rational& b) { return a + b; }, x, y);
}

Real neg(const Real& x) {
  return lift([](const Rational& a) { return -a; }, identity_modulus(), x);
}

Real sub(const Real& x, const Real& y) { return add(x, neg(y)); }

Real scale(const Rational& q, const Real& x) {
  if (q.is_zero()) return lift([](const Rational&) { return Rational(0); }, [](const PosTol&) { return ExtTol::infinity(); }, x);
  const Rational m = abs(q);
  return lift([q](const Rational& a) { return q * a; }, [m](const PosTol& eps) { return ExtTol(shrink_by(eps, m)); }, x);
}

Real sq(const Real& x) {
  const Rational c = bound_of(x);
  return lift(
      [c](const Rational& a) {
        const Rational t = clamp(a, -c, c);
        return t * t;
      },
      [c](const PosTol& eps) { return ExtTol(shrink_by(eps, 2 * c)); }, x);
}

Real mul(const Real& x, const Real& y) {
  const Rational cy = bound_of(y);
  const Rational cx = bound_of(x);
  CurriedRatFn f{
      [cx, cy](const Rational& a) {
        const Rational ca = clamp(a, -cx, cx);
        return RatFn{[ca, cy](const Rational& b) { return ca * clamp(b, -cy, cy); },
                     [cx](const PosTol& eps) { return ExtTol(shrink_by(eps, cx)); }};
      },
      [cy](const PosTol& eps) { return ExtTol(shrink_by(eps, cy)); }};
  return map2(std::move(f), x, y);
}

Real pow(const Real& x, std::uint64_t n) {
  if (n == 0) return constant(1);
  if (n == 1) return x;
  if (n == 2) return sq(x);
  const Rational c = bound_of(x);
  // slope of a^n on [-c, c] is at most n c^(n-1)
  const Rational slope = Rational(n) * xreal::pow(c, n - 1);
  return lift([c, n](const Rational& a) { return xreal::pow(clamp(a, -c, c), n); },
              [slope](const PosTol& eps) { return ExtTol(shrink_by(eps, slope)); }, x);
}

Real require_at_least(const Real& x, const Rational& c) {
  return Real([x, c](const PosTol& d) {
    Rational a = x.query(d);
    if (a < c - d.value())
      throw ContractViolation("positivity witness " + c.to_string() + " contradicted by approximation " +
                              a.to_string() + " at tolerance " + d.value().to_string());
    return a;
  });
}

Real inv(const Real& x, const PositivityWitness& w) {
  const Rational c = w.epsilon.value();
  // slope of 1/a on [c, inf) is 1/c^2; (2^floor_log2(c))^2 <= c^2
  const std::int64_t k = 2 * floor_log2(c);
  return lift([c](const Rational& a) { return 1 / max(a, c); },
              [k](const PosTol& eps) { return ExtTol(eps.times_pow2(k)); }, require_at_least(x, c));
}

Real inv(const Real& x, const NegativityWitness& w) {
  return neg(inv(neg(x), PositivityWitness{w.epsilon}));
}

Real abs(const Real& x) {
  return lift([](const Rational& a) { return abs(a); }, identity_modulus(), x);
}

Real min(const Real& x, const Real& y) {
  return lift_lipschitz2([](const Rational& a, const Rational& b) { return min(a, b); }, x, y);
}

Real max(const Real& x, const Real& y) {
  return lift_lipschitz2([](const Rational& a, const Rational& b) { return max(a, b); }, x, y);
}

Real compress(const Real& x) {
  return Real([x](const PosTol& eps) {
    const PosTol h = eps.half();
    return approx_dyadic(x.query(h), h);
  });
}

Verdict check_nonneg_at(const Real& x, const PosTol& eps) {
  return x.query(eps) < -eps.value() ? Verdict::refuted : Verdict::consistent;
}

SignSearch find_positivity_witness(const Real& x, const PosTol& delta0, std::size_t max_iters) {
  if (max_iters == 0) throw std::invalid_argument("find_positivity_witness: max_iters must be at least 1");
  SignSearch result{Inconclusive{}, {}};
  PosTol delta = delta0;
  for (std::size_t i = 0; i < max_iters; ++i, delta = delta.half()) {
    result.probes.push_back(delta);
    const Rational a = x.query(delta);
    const Rational lower = a - delta.value();
    if (lower.sign() > 0) {
      result.outcome = PositivityWitness{PosTol(lower)};
      return result;
    }
    const Rational upper = a + delta.value();
    if (upper.sign() < 0) {
      result.outcome = NegativityWitness{PosTol(-upper)};
      return result;
    }
  }
  return result;
}

SignSearch lt(const Real& x, const Real& y, const PosTol& delta0, std::size_t max_iters) {
  return find_positivity_witness(sub(y, x), delta0, max_iters);
}

std::string to_decimal(const Real& x, std::size_t digits) {
  if (digits == 0) throw std::invalid_argument("to_decimal: digits must be at least 1");
  Integer scale10;
  mpz_ui_pow_ui(scale10.get_mpz_t(), 10, digits);
  const PosTol eps(Rational(Integer(1), scale10) / 2);
  const Integer n = round_half_away(x.query(eps) * Rational(scale10));

  std::string body = n.get_str();
  const bool negative = body.front() == '-';
  if (negative) body.erase(0, 1);
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return negative ? "-" + body : body;
}

}  // namespace xreal
