/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include "support.hpp"
#include "xreal/series.hpp"

using namespace xreal;
using namespace xreal::series;
using xtest::Big;
using xtest::tol;

namespace {

AlternatingSeries leibniz() {
  return {Terms::indexed([](std::uint64_t i) {
    return Rational(i % 2 == 0 ? 1 : -1) / Rational(static_cast<std::int64_t>(2 * i + 1));
  })};
}

AlternatingSeries sin_series(const Rational& a) {
  return {Terms::recurrence(a, [a](std::uint64_t i) {
    const auto k = static_cast<std::int64_t>(2 * i + 2);
    return -(a * a) / Rational(k * (k + 1));
  })};
}

SubGeometricSeries geometric(const Rational& r) {
  return {Terms::recurrence(1, [r](std::uint64_t) { return r; }), r};
}

}  // namespace

TEST_CASE("Leibniz series at 1/10") {
  const PartialSum s = sum_alternating(leibniz(), tol("1/10"), 100);
  CHECK(s.value == Rational(263, 315));
  CHECK(s.terms == 5);
  const Big quarter_pi = boost::math::constants::pi<Big>() / 4;
  CHECK(boost::multiprecision::abs(xtest::to_big(s.value) - quarter_pi) <= Big("0.1"));
}

TEST_CASE("sine series at 1") {
  // 1/5040 <= 1/1000 already stops the sum before that term
  const PartialSum s = sum_alternating(sin_series(1), tol("1/1000"), 100);
  CHECK(s.value == Rational(101, 120));
  CHECK(boost::multiprecision::abs(xtest::to_big(s.value) - boost::multiprecision::sin(Big(1))) <= Big("0.001"));
  const PartialSum t = sum_alternating(sin_series(1), tol("1/10000"), 100);
  CHECK(t.value == Rational(4241, 5040));
  CHECK(boost::multiprecision::abs(xtest::to_big(t.value) - boost::multiprecision::sin(Big(1))) <= Big("0.0001"));
  CHECK(alternating_contract_holds(sin_series(1), 30));
}

TEST_CASE("an empty sum when the first term is already small") {
  const PartialSum s = sum_alternating(leibniz(), tol("2"), 100);
  CHECK(s.value == Rational(0));
  CHECK(s.terms == 0);
}

TEST_CASE("geometric series at 1/8") {
  const PartialSum s = sum_subgeometric(geometric(Rational(1, 2)), tol("1/8"), 100);
  CHECK(s.value == Rational(15, 8));
  CHECK(abs(s.value - 2) <= Rational(1, 8));
}

TEST_CASE("exponential series at 1/2") {
  const Rational a(1, 2);
  SubGeometricSeries s{Terms::recurrence(1, [a](std::uint64_t i) {
                         return a / Rational(static_cast<std::int64_t>(i + 1));
                       }),
                       a};
  CHECK(subgeometric_contract_holds(s, 40));
  const PartialSum p = sum_subgeometric(s, xtest::ten_pow(6), 100);
  CHECK(boost::multiprecision::abs(xtest::to_big(p.value) - boost::multiprecision::exp(Big("0.5"))) <= Big("1e-6"));
}

TEST_CASE("a large tolerance keeps only the first term") {
  const PartialSum s = sum_subgeometric(geometric(Rational(1, 2)), tol("10"), 100);
  CHECK(s.value == Rational(1));
  CHECK(s.terms == 1);
}

TEST_CASE("the guard cap stops runaway summation") {
  CHECK_THROWS_AS(sum_alternating(leibniz(), xtest::ten_pow(9), 1000), NonTermination);
  CHECK_THROWS_AS(sum_subgeometric(geometric(Rational(99, 100)), xtest::ten_pow(9), 10), NonTermination);
  const AlternatingSeries ones{Terms::indexed([](std::uint64_t i) { return Rational(i % 2 ? -1 : 1); })};
  CHECK_THROWS_AS(sum_alternating(ones, tol("1/2"), kTermCeiling + 5), NonTermination);
}

TEST_CASE("the ratio must lie strictly between 0 and 1") {
  CHECK_THROWS_AS(sum_subgeometric(geometric(Rational(1)), tol("1"), 10), std::invalid_argument);
  CHECK_THROWS_AS(sum_subgeometric({Terms::indexed([](std::uint64_t) { return Rational(0); }), Rational(0)},
                                   tol("1"), 10),
                  std::invalid_argument);
}

TEST_CASE("summation error is within tolerance for random tolerances") {
  std::mt19937_64 rng(31);
  const Big quarter_pi = boost::math::constants::pi<Big>() / 4;
  for (int i = 0; i < 200; ++i) {
    const PosTol eps = xtest::random_tol(rng, 10);
    const PartialSum s = sum_alternating(leibniz(), eps, kTermCeiling);
    CHECK(boost::multiprecision::abs(xtest::to_big(s.value) - quarter_pi) <= xtest::to_big(eps.value()));
    const Rational r = xtest::random_in(rng, Rational(1, 100), Rational(9, 10), 90);
    if (r.is_zero()) continue;
    const PosTol fine = xtest::random_tol(rng, 40);
    const PartialSum g = sum_subgeometric(geometric(r), fine, kTermCeiling);
    CHECK(abs(g.value - 1 / (1 - r)) <= fine.value());
  }
}

TEST_CASE("finer tolerances never use fewer terms") {
  std::uint64_t prev = 0, prev_g = 0;
  for (unsigned k = 0; k <= 12; ++k) {
    const PosTol eps = xtest::ten_pow(k);
    const auto n = sum_alternating(sin_series(Rational(7, 8)), eps, kTermCeiling).terms;
    const auto g = sum_subgeometric(geometric(Rational(3, 4)), eps, kTermCeiling).terms;
    CHECK(n >= prev);
    CHECK(g >= prev_g);
    prev = n;
    prev_g = g;
  }
}

TEST_CASE("the analytic cap is sufficient") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    const Rational r = xtest::random_in(rng, Rational(1, 50), Rational(49, 50), 49);
    const PosTol eps = xtest::random_tol(rng, 60);
    const auto cap = term_cap(1, r, eps);
    CHECK_NOTHROW(sum_subgeometric(geometric(r), eps, cap));
    const Rational a = xtest::random_in(rng, Rational(-1), Rational(1), 64);
    CHECK_NOTHROW(sum_alternating(sin_series(a), eps, term_cap(abs(a) + Rational(1, 1000), Rational(1, 6), eps)));
  }
}

TEST_CASE("contract samplers reject bad series") {
  const AlternatingSeries same_sign{Terms::indexed([](std::uint64_t i) { return Rational(1) / (i + 1); })};
  CHECK_FALSE(alternating_contract_holds(same_sign, 5));
  const AlternatingSeries growing{Terms::indexed([](std::uint64_t i) { return Rational(i % 2 ? -1 : 1) * (i + 1); })};
  CHECK_FALSE(alternating_contract_holds(growing, 5));
  CHECK_FALSE(subgeometric_contract_holds({geometric(Rational(3, 4)).terms, Rational(1, 2)}, 5));
  CHECK(alternating_contract_holds(leibniz(), 100));
}
