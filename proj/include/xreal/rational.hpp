/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace xreal {

using Integer = mpz_class;

/// Base-10 digits with an optional leading '-'. Leading zeros are decimal.
Integer parse_integer(std::string_view digits);

/// Exact fraction, always kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Rational(T n) : value_(static_cast<unsigned long>(n)) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error when den == 0.
  Rational(const Integer& num, const Integer& den);

  explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

  /// Accepts "n", "-n", "n/d" and finite decimals such as "3.14159" (exact).
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return value_.get_num(); }
  const Integer& denominator() const { return value_.get_den(); }
  const mpq_class& gmp() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return denominator() == 1; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const;  // "n" or "n/d"
  double to_double() const { return value_.get_d(); }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
Rational clamp(const Rational& q, const Rational& lo, const Rational& hi);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
/// Nearest integer, halves rounded away from zero.
Integer round_half_away(const Rational& q);

/// 2^k for any integer k.
Rational pow2(std::int64_t k);
/// q^n by repeated squaring.
Rational pow(const Rational& q, std::uint64_t n);

/// Smallest k with 2^k >= q. Requires q > 0.
std::int64_t ceil_log2(const Rational& q);
/// Largest k with 2^k <= q. Requires q > 0.
std::int64_t floor_log2(const Rational& q);

/// Bit length of |numerator| and of the denominator.
std::size_t numerator_bits(const Rational& q);
std::size_t denominator_bits(const Rational& q);

/// Strictly positive rational, used for tolerances and moduli.
class PosTol {
 public:
  /// Throws std::domain_error unless v > 0.
  explicit PosTol(Rational v);

  const Rational& value() const { return value_; }

  PosTol half() const { return PosTol(value_ / 2, Trusted{}); }
  /// value * 2^k
  PosTol times_pow2(std::int64_t k) const { return PosTol(value_ * pow2(k), Trusted{}); }

  friend PosTol operator+(const PosTol& a, const PosTol& b) { return PosTol(a.value_ + b.value_, Trusted{}); }
  friend PosTol operator*(const PosTol& a, const PosTol& b) { return PosTol(a.value_ * b.value_, Trusted{}); }
  friend PosTol operator/(const PosTol& a, const PosTol& b) { return PosTol(a.value_ / b.value_, Trusted{}); }

  friend bool operator==(const PosTol&, const PosTol&) = default;
  friend std::strong_ordering operator<=>(const PosTol& a, const PosTol& b) { return a.value_ <=> b.value_; }

 private:
  struct Trusted {};
  PosTol(Rational v, Trusted) : value_(std::move(v)) {}
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const PosTol& t);

/// PosTol extended with infinity; infinity is above every finite value.
class ExtTol {
 public:
  ExtTol(PosTol v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static ExtTol infinity() { return ExtTol(); }

  bool is_finite() const { return value_.has_value(); }
  /// Throws std::logic_error on infinity.
  const PosTol& finite() const;

  ExtTol half() const { return value_ ? ExtTol(value_->half()) : infinity(); }

  friend ExtTol operator+(const ExtTol& a, const ExtTol& b) {
    if (!a.value_ || !b.value_) return infinity();
    return ExtTol(*a.value_ + *b.value_);
  }

  friend bool operator==(const ExtTol&, const ExtTol&) = default;
  friend std::strong_ordering operator<=>(const ExtTol& a, const ExtTol& b);

 private:
  ExtTol() = default;
  std::optional<PosTol> value_;
};

std::ostream& operator<<(std::ostream& os, const ExtTol& t);

/// Returns b / 2^n with 2^n the smallest power of two strictly greater than
/// denominator(delta) and b the nearest integer to a * 2^n (halves away from
/// zero). The result is within delta / 2 of a.
Rational approx_dyadic(const Rational& a, const PosTol& delta);

}  // namespace xreal
