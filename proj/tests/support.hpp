/* SPDX-License-Identifier: Apache-2.0 */

// Shared helpers for the test binaries. Oracle values come from Boost
// multiprecision, which shares no code with the library under test.

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "xreal/completion.hpp"
#include "xreal/rational.hpp"
#include "xreal/real.hpp"

namespace xtest {

using Big = boost::multiprecision::cpp_bin_float_100;
using OracleRational = boost::multiprecision::cpp_rational;

inline xreal::PosTol tol(const char* text) { return xreal::PosTol(xreal::Rational::parse(text)); }

/// 10^-k
inline xreal::PosTol ten_pow(unsigned k) {
  xreal::Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, k);
  return xreal::PosTol(xreal::Rational(xreal::Integer(1), d));
}

/// 1, 1/10, ..., 10^-k
inline std::vector<xreal::PosTol> decade_probes(unsigned k) {
  std::vector<xreal::PosTol> out;
  for (unsigned i = 0; i <= k; ++i) out.push_back(ten_pow(i));
  return out;
}

inline Big to_big(const xreal::Rational& q) {
  return Big(q.numerator().get_str()) / Big(q.denominator().get_str());
}

inline OracleRational to_oracle(const xreal::Rational& q) {
  return OracleRational(boost::multiprecision::cpp_int(q.numerator().get_str()),
                        boost::multiprecision::cpp_int(q.denominator().get_str()));
}

inline std::string to_string(const OracleRational& q) {
  const auto n = boost::multiprecision::numerator(q);
  const auto d = boost::multiprecision::denominator(q);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

/// |x(eps) - truth| <= eps, with a margin for the oracle's own rounding.
inline bool within(const xreal::Real& x, const Big& truth, const xreal::PosTol& eps) {
  using boost::multiprecision::abs;
  return abs(to_big(x.query(eps)) - truth) <= to_big(eps.value()) + Big("1e-95");
}

/// Random rational num/den with |num| <= max_num and 1 <= den <= max_den.
inline xreal::Rational random_rational(std::mt19937_64& rng, std::int64_t max_num, std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> num(-max_num, max_num);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  return xreal::Rational(xreal::Integer(std::to_string(num(rng))), xreal::Integer(std::to_string(den(rng))));
}

/// Random rational in [lo, hi] on a grid of 1/steps.
inline xreal::Rational random_in(std::mt19937_64& rng, const xreal::Rational& lo, const xreal::Rational& hi,
                                 std::int64_t steps = 1000) {
  std::uniform_int_distribution<std::int64_t> k(0, steps);
  return lo + (hi - lo) * xreal::Rational(k(rng)) / xreal::Rational(steps);
}

/// Random tolerance 2^-k * m/16 with 1 <= m <= 16 and 0 <= k <= max_exp.
inline xreal::PosTol random_tol(std::mt19937_64& rng, int max_exp) {
  std::uniform_int_distribution<int> k(0, max_exp);
  std::uniform_int_distribution<int> m(1, 16);
  return xreal::PosTol(xreal::pow2(-k(rng)) * xreal::Rational(m(rng), 16));
}

}  // namespace xtest
