/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include "support.hpp"
#include "xreal/cli.hpp"
#include "xreal/elementary.hpp"
#include "xreal/parser.hpp"
#include "xreal/prover.hpp"

using namespace xreal;
using xtest::tol;

namespace {

const std::vector<PosTol> kProbes = {tol("1"), tol("1/7"), tol("1/1000"), xtest::ten_pow(12)};

ProofStatus status(const char* lhs, const char* rhs) {
  return prove_lt(parse_expr(lhs), parse_expr(rhs)).status;
}

}  // namespace

TEST_CASE("evaluation") {
  CHECK(ball_check(ExtTol(xtest::ten_pow(20)), eval(expr::pi()), pi(), kProbes) == Verdict::consistent);
  CHECK(cli::compare_digits(to_decimal(eval(parse_expr("sqrt(e/pi)")), 20), "0.93019136710263285866") !=
        cli::DigitMatch::mismatch);
  CHECK(to_decimal(eval(parse_expr("2^10 - 1000")), 3) == "24.000");
  CHECK(to_decimal(eval(parse_expr("1/(0-4)")), 3) == "-0.250");
  CHECK(xtest::within(eval(parse_expr("atan(1/pi) * cos(e) + ln(3)")),
                      boost::multiprecision::atan(1 / boost::math::constants::pi<xtest::Big>()) *
                              boost::multiprecision::cos(boost::math::constants::e<xtest::Big>()) +
                          boost::multiprecision::log(xtest::Big(3)),
                      xtest::ten_pow(30)));
}

TEST_CASE("side conditions") {
  CHECK_THROWS_WITH_AS(eval(parse_expr("ln(-1)")), doctest::Contains("provably <= 0"), DomainError);
  CHECK_THROWS_WITH_AS(eval(parse_expr("ln(0)")), doctest::Contains("cannot certify"), DomainError);
  CHECK_THROWS_WITH_AS(eval(parse_expr("1/(pi-pi)")), doctest::Contains("cannot certify"), DomainError);
  CHECK_NOTHROW(eval(parse_expr("ln(ln(exp(exp(1))))")));
  CHECK(to_decimal(eval(parse_expr("ln(ln(exp(exp(1))))")), 15) == "1.000000000000000");
}

TEST_CASE("prove_pos") {
  const ProofOutcome a = prove_pos(parse_expr("sin(pi/2)"));
  CHECK(a.status == ProofStatus::proved);
  REQUIRE(a.witness);
  const ProofOutcome b = prove_pos(expr::sub(expr::pi(), expr::lit(Rational(314159, 100000))));
  CHECK(b.status == ProofStatus::proved);
  CHECK(b.iterations() > 5);
  const ProofOutcome c = prove_pos(expr::lit(0));
  CHECK(c.status == ProofStatus::inconclusive);
  CHECK(c.iterations() == 64);
  CHECK_FALSE(c.witness);
}

TEST_CASE("prove_lt") {
  const ProofOutcome a = prove_lt(expr::lit(0), expr::lit(1));
  CHECK(a.status == ProofStatus::proved);
  CHECK(a.iterations() <= 2);
  CHECK(status("pi", "4") == ProofStatus::proved);
  CHECK(status("4", "pi") == ProofStatus::disproved);
  CHECK(status("pi", "355/113") == ProofStatus::proved);
  CHECK(status("exp(pi) - pi", "20") == ProofStatus::proved);
}

TEST_CASE("witnesses are sound") {
  for (const char* s : {"sin(pi/2)", "355/113 - pi", "exp(1) - 2.718281828", "sqrt(2) - 1.4142135"}) {
    const Expr e = parse_expr(s);
    const ProofOutcome p = prove_pos(e);
    REQUIRE(p.status == ProofStatus::proved);
    const Real x = eval(e);
    const Rational w = p.witness->epsilon.value();
    for (const auto& d : {tol("3"), tol("1/17"), xtest::ten_pow(30)}) CHECK(x.query(d) >= w - d.value());
  }
}

TEST_CASE("antisymmetry") {
  const char* pairs[][2] = {{"pi", "22/7"}, {"e", "pi"}, {"sqrt(2)", "1.5"}, {"ln(2)", "atan(1)"}, {"cos(1)", "1/2"}};
  for (const auto& p : pairs) {
    const ProofStatus fwd = status(p[0], p[1]);
    const ProofStatus back = status(p[1], p[0]);
    CHECK(fwd != ProofStatus::inconclusive);
    CHECK((fwd == ProofStatus::proved) == (back == ProofStatus::disproved));
  }
}

TEST_CASE("structural identities") {
  const char* exprs[] = {"pi", "e", "sin(2)", "sqrt(3)/2", "ln(5)", "atan(e)"};
  for (const char* a : exprs)
    for (const char* b : exprs) {
      const Expr x = parse_expr(a), y = parse_expr(b);
      CHECK(ball_check(ExtTol(xtest::ten_pow(15)), eval(expr::mul(x, y)), eval(expr::mul(y, x)), kProbes) ==
            Verdict::consistent);
    }
}

TEST_CASE("search settings are honoured") {
  SearchSettings s;
  s.max_iters = 5;
  CHECK(prove_lt(expr::pi(), expr::lit(Rational(355, 113)), s).status == ProofStatus::inconclusive);
  s.delta0 = xtest::ten_pow(8);
  CHECK(prove_lt(expr::pi(), expr::lit(Rational(355, 113)), s).status == ProofStatus::proved);
}
