/* SPDX-License-Identifier: Apache-2.0 */

#include "xreal/elementary.hpp"

#include <array>
#include <stdexcept>

#include "xreal/series.hpp"

namespace xreal {

namespace {

using series::AlternatingSeries;
using series::SubGeometricSeries;
using series::Terms;

using RatFn = UcFn<Rational, Rational>;
using RatToReal = UcFn<Rational, Real>;

const PosTol& unit_tolerance() {
  static const PosTol tol(Rational(1));
  return tol;
}

Real maybe_compress(const Real& x, const ElementaryOptions& opts) { return opts.compress ? compress(x) : x; }

std::function<ExtTol(const PosTol&)> modulus_divided_by(const Rational& slope) {
  return [slope](const PosTol& eps) { return ExtTol(shrink_by(eps, slope)); };
}

Real alternating_real(AlternatingSeries s, Rational lead, Rational q) {
  return Real([s = std::move(s), lead = std::move(lead), q = std::move(q)](const PosTol& eps) {
    return series::sum_alternating(s, eps, series::term_cap(lead, q, eps)).value;
  });
}

Real subgeometric_real(SubGeometricSeries s, Rational lead) {
  return Real([s = std::move(s), lead = std::move(lead)](const PosTol& eps) {
    return series::sum_subgeometric(s, eps, series::term_cap(lead, s.ratio, eps)).value;
  });
}

/// sum (-1)^i a^(2i+1) / (2i+1)!, |a| <= 1
Real sin_series(const Rational& a) {
  if (a.is_zero()) return constant(0);
  const Rational a2 = a * a;
  auto terms = Terms::recurrence(a, [a2](std::uint64_t i) {
    return -a2 / Rational((2 * i + 2) * (2 * i + 3));
  });
  return alternating_real(AlternatingSeries{std::move(terms)}, abs(a), Rational(1, 6));
}

/// sum (-1)^i a^(2i+1) / (2i+1), |a| <= 1/2
Real atan_series(const Rational& a) {
  if (a.is_zero()) return constant(0);
  const Rational a2 = a * a;
  auto terms = Terms::recurrence(a, [a2](std::uint64_t i) {
    return -a2 * Rational(2 * i + 1) / Rational(2 * i + 3);
  });
  return alternating_real(AlternatingSeries{std::move(terms)}, abs(a), a2);
}

/// 3s - 4s^3 on [-1, 1]; slope at most 9.
Real triple_angle(const Real& s) {
  return map_prime(RatFn{[](const Rational& a) {
                           const Rational t = clamp(a, Rational(-1), Rational(1));
                           return 3 * t - 4 * t * t * t;
                         },
                         modulus_divided_by(9)},
                   s);
}

}  // namespace

ReducedArg reduce_sin_argument(const Rational& a) {
  ReducedArg r{a, 0, Reduction::triple_angle};
  while (abs(r.value) > 1) {
    r.value /= 3;
    ++r.count;
  }
  return r;
}

ReducedArg reduce_ln_argument(const Rational& q) {
  if (q.sign() <= 0) throw std::domain_error("reduce_ln_argument: argument must be positive");
  ReducedArg r{q, 0, Reduction::power_of_two_division};
  if (q >= Rational(1, 2) && q <= 2) return r;
  r.count = ceil_log2(q / 2);
  r.value = q * pow2(-r.count);
  return r;
}

ReducedArg reduce_exp_argument(const Rational& a) {
  const Integer m = ceil(abs(a) + 2);
  const std::int64_t k = ceil_log2(Rational(m));
  return ReducedArg{a * pow2(-k), k, Reduction::power_of_two_scaling};
}

Real sin_q(const Rational& a, const ElementaryOptions& opts) {
  const ReducedArg r = reduce_sin_argument(a);
  Real s = sin_series(r.value);
  for (std::int64_t i = 0; i < r.count; ++i) s = maybe_compress(triple_angle(s), opts);
  return s;
}

Real sin(const Real& x, const ElementaryOptions& opts) {
  // |sin a - sin b| <= min(|a - b|, 2)
  RatToReal f{[opts](const Rational& a) { return sin_q(a, opts); },
              [](const PosTol& eps) { return eps.value() < 2 ? ExtTol(eps) : ExtTol::infinity(); }};
  return bind_prime(std::move(f), maybe_compress(x, opts));
}

Real cos(const Real& x, const ElementaryOptions& opts) {
  const Real s = sin(scale(Rational(1, 2), x), opts);
  return sub(constant(1), scale(2, sq(s)));
}

Real atan_q(const Rational& a) {
  const Rational m = abs(a);
  if (m > 1) throw std::domain_error("atan_q: argument " + a.to_string() + " outside [-1, 1]");
  if (m <= Rational(1, 2)) return atan_series(a);
  // atan(m) = atan(1/2) + atan((m - 1/2) / (1 + m/2)), second argument in (0, 1/3]
  const Rational rest = (m - Rational(1, 2)) / (1 + m / 2);
  Real sum = add(atan_series(Rational(1, 2)), atan_series(rest));
  return a.sign() < 0 ? neg(sum) : sum;
}

Real atan_q_total(const Rational& a, const ElementaryOptions& opts) {
  if (abs(a) <= 1) return atan_q(a);
  const Rational half_turn = a.sign() > 0 ? Rational(1, 2) : Rational(-1, 2);
  return sub(scale(half_turn, pi(opts)), atan_q(1 / a));
}

Real atan(const Real& x, const ElementaryOptions& opts) {
  RatToReal f{[opts](const Rational& a) { return atan_q_total(a, opts); }, identity_modulus()};
  return bind_prime(std::move(f), maybe_compress(x, opts));
}

std::span<const ArctanTerm> pi_formula() {
  static const std::array<ArctanTerm, 4> terms{{
      {176, Rational(1, 57)},
      {28, Rational(1, 239)},
      {-48, Rational(1, 682)},
      {96, Rational(1, 12943)},
  }};
  return terms;
}

Real pi(const ElementaryOptions& opts) {
  const auto terms = pi_formula();
  Real acc = scale(terms[0].coefficient, atan_q(terms[0].argument));
  for (const auto& t : terms.subspan(1))
    acc = maybe_compress(add(acc, scale(t.coefficient, atan_q(t.argument))), opts);
  return acc;
}

std::optional<Rational> arctan_multiple_check(const Rational& a, std::uint64_t n, const Rational& start) {
  if (!(a > -1 && a < 1)) throw std::invalid_argument("arctan_multiple_check: a must lie in ]-1, 1[");
  Rational b = start;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!(b > -1 && b < 1)) return std::nullopt;
    b = (a + b) / (1 - a * b);
  }
  return b;
}

Real artanh_q(const Rational& a) {
  if (abs(a) > Rational(1, 3)) throw std::domain_error("artanh_q: argument " + a.to_string() + " outside [-1/3, 1/3]");
  if (a.is_zero()) return constant(0);
  const Rational a2 = a * a;
  auto terms = Terms::recurrence(a, [a2](std::uint64_t i) {
    return a2 * Rational(2 * i + 1) / Rational(2 * i + 3);
  });
  return subgeometric_real(SubGeometricSeries{std::move(terms), a2}, abs(a));
}

Real ln2() { return scale(2, artanh_q(Rational(1, 3))); }

Real ln_q(const Rational& q) {
  if (q < Rational(1, 2) || q > 2) throw std::domain_error("ln_q: argument " + q.to_string() + " outside [1/2, 2]");
  return scale(2, artanh_q((q - 1) / (q + 1)));
}

Real ln(const Real& x, const PositivityWitness& w, const ElementaryOptions& opts) {
  const Rational c = w.epsilon.value();
  const Real checked = require_at_least(maybe_compress(x, opts), c);
  // x lies in [lower, upper] and upper <= 2 lower
  const PosTol t = w.epsilon.half();
  const Rational v = checked.query(t);
  const Rational lower = max(c, v - t.value());
  const Rational upper = v + t.value();

  std::int64_t m = 0;
  if (lower < Rational(1, 2) || upper > 2) m = ceil_log2(upper / 2);
  const Rational lo = lower * pow2(-m);
  const Rational hi = upper * pow2(-m);

  // slope of ln on [1/2, 2] is at most 2
  RatToReal f{[lo, hi](const Rational& a) { return ln_q(clamp(a, lo, hi)); }, modulus_divided_by(2)};
  Real reduced = bind_prime(std::move(f), m == 0 ? checked : scale(pow2(-m), checked));
  if (m == 0) return reduced;
  return add(reduced, scale(Rational(m), ln2()));
}

Real exp_q(const Rational& a) {
  if (abs(a) >= 1) throw std::domain_error("exp_q: argument " + a.to_string() + " outside (-1, 1)");
  if (a.is_zero()) return constant(1);
  if (a.sign() < 0) return inv(exp_q(-a), PositivityWitness{PosTol(Rational(1))});
  auto terms = Terms::recurrence(Rational(1), [a](std::uint64_t i) { return a / Rational(i + 1); });
  return subgeometric_real(SubGeometricSeries{std::move(terms), a}, Rational(1));
}

Real exp(const Real& arg, const ElementaryOptions& opts) {
  const Real x = maybe_compress(arg, opts);
  const Rational c = abs(x.query(unit_tolerance()));
  const std::int64_t k = reduce_exp_argument(c).count;
  // |x / 2^k| <= (c + 1) / 2^k < 1
  const Rational bound = (c + 1) * pow2(-k);
  // slope of exp on [-bound, bound] is below e < 4
  RatToReal f{[bound](const Rational& a) { return exp_q(clamp(a, -bound, bound)); }, modulus_divided_by(4)};
  Real z = bind_prime(std::move(f), scale(pow2(-k), x));
  for (std::int64_t i = 0; i < k; ++i) z = maybe_compress(sq(z), opts);
  return z;
}

Real euler(const ElementaryOptions& opts) { return exp(constant(1), opts); }

Real sqrt_q(const Rational& a) {
  if (a.sign() <= 0) return constant(0);
  return Real([a](const PosTol& eps) {
    // 2^-p <= eps; isqrt(ceil(a 4^p)) / 2^p is within 2^-p of sqrt(a)
    const std::int64_t p = -floor_log2(eps.value());
    const Integer n = ceil(a * pow2(2 * p));
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return Rational(root) * pow2(-p);
  });
}

Real sqrt(const Real& x) {
  // |sqrt a - sqrt b| <= sqrt |a - b|
  RatToReal f{[](const Rational& a) { return sqrt_q(a); },
              [](const PosTol& eps) { return ExtTol(eps * eps); }};
  return bind_prime(std::move(f), x);
}

}  // namespace xreal
