/* SPDX-License-Identifier: Apache-2.0 */

#include "xreal/rational.hpp"

#include <cctype>
#include <ostream>

namespace xreal {

Integer parse_integer(std::string_view digits) { return Integer(std::string(digits), 10); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("rational: malformed fraction '" + std::string(text) + "'");
    result = Rational(parse_integer(num), parse_integer(den));
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw std::invalid_argument("rational: malformed decimal '" + std::string(text) + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const Integer digits = parse_integer(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    result = Rational(digits, scale);
  } else {
    if (!all_digits(text))
      throw std::invalid_argument("rational: malformed integer '" + std::string(text) + "'");
    result = Rational(parse_integer(text));
  }
  return negative ? -result : result;
}

std::string Rational::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational clamp(const Rational& q, const Rational& lo, const Rational& hi) {
  if (q < lo) return lo;
  if (hi < q) return hi;
  return q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
  return r;
}

Integer round_half_away(const Rational& q) {
  // floor(|q| + 1/2) with the sign restored
  const Rational shifted = abs(q) + Rational(1, 2);
  Integer r = floor(shifted);
  return q.sign() < 0 ? Integer(-r) : r;
}

Rational pow2(std::int64_t k) {
  Integer p = 1;
  if (k >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  return Rational(Integer(1), p);
}

Rational pow(const Rational& q, std::uint64_t n) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.numerator().get_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), q.denominator().get_mpz_t(), n);
  // already coprime
  return Rational(mpq_class(num, den));
}

std::int64_t floor_log2(const Rational& q) {
  if (q.sign() <= 0) throw std::domain_error("floor_log2: argument must be positive");
  // num/den in [2^(a-1), 2^a) / [2^(b-1), 2^b) gives an estimate within one.
  const auto a = static_cast<std::int64_t>(mpz_sizeinbase(q.numerator().get_mpz_t(), 2));
  const auto b = static_cast<std::int64_t>(mpz_sizeinbase(q.denominator().get_mpz_t(), 2));
  std::int64_t k = a - b;
  while (pow2(k) > q) --k;
  while (pow2(k + 1) <= q) ++k;
  return k;
}

std::int64_t ceil_log2(const Rational& q) {
  const std::int64_t k = floor_log2(q);
  return pow2(k) == q ? k : k + 1;
}

std::size_t numerator_bits(const Rational& q) {
  return q.is_zero() ? 0 : mpz_sizeinbase(q.numerator().get_mpz_t(), 2);
}

std::size_t denominator_bits(const Rational& q) { return mpz_sizeinbase(q.denominator().get_mpz_t(), 2); }

PosTol::PosTol(Rational v) : value_(std::move(v)) {
  if (value_.sign() <= 0) throw std::domain_error("tolerance must be strictly positive, got " + value_.to_string());
}

std::ostream& operator<<(std::ostream& os, const PosTol& t) { return os << t.value(); }

const PosTol& ExtTol::finite() const {
  if (!value_) throw std::logic_error("ExtTol: infinite tolerance has no finite value");
  return *value_;
}

std::strong_ordering operator<=>(const ExtTol& a, const ExtTol& b) {
  if (!a.value_ && !b.value_) return std::strong_ordering::equal;
  if (!a.value_) return std::strong_ordering::greater;
  if (!b.value_) return std::strong_ordering::less;
  return *a.value_ <=> *b.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtTol& t) {
  if (!t.is_finite()) return os << "inf";
  return os << t.finite();
}

Rational approx_dyadic(const Rational& a, const PosTol& delta) {
  // 2^n > den(delta) means n = bitlength(den)
  const auto n = static_cast<mp_bitcnt_t>(mpz_sizeinbase(delta.value().denominator().get_mpz_t(), 2));
  Integer scaled_num = a.numerator();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), n);
  const Integer b = round_half_away(Rational(scaled_num, a.denominator()));
  Integer denom = 1;
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), n);
  return Rational(b, denom);
}

}  // namespace xreal
