/* SPDX-License-Identifier: Apache-2.0 */

#include "xreal/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace xreal::series {

namespace {

double log2_of(const Integer& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

double log2_of(const Rational& q) { return log2_of(q.numerator()) - log2_of(q.denominator()); }

std::uint64_t effective_cap(std::uint64_t cap) { return std::min(cap, kTermCeiling); }

[[noreturn]] void exceeded(const char* what, std::uint64_t cap, const PosTol& eps) {
  throw NonTermination(std::string(what) + ": no stopping term within " + std::to_string(cap) +
                       " terms at tolerance " + eps.value().to_string());
}

}  // namespace

Terms Terms::indexed(ByIndex term) {
  Terms t;
  t.by_index_ = std::move(term);
  return t;
}

Terms Terms::recurrence(Rational first, ByIndex ratio) {
  Terms t;
  t.first_ = std::move(first);
  t.ratio_ = std::move(ratio);
  return t;
}

Rational Terms::Cursor::next() {
  const std::uint64_t i = index_++;
  if (terms_->by_index_) return terms_->by_index_(i);
  current_ = i == 0 ? terms_->first_ : current_ * terms_->ratio_(i - 1);
  return current_;
}

Rational Terms::at(std::uint64_t i) const {
  if (by_index_) return by_index_(i);
  auto c = cursor();
  Rational t;
  for (std::uint64_t k = 0; k <= i; ++k) t = c.next();
  return t;
}

PartialSum sum_alternating(const AlternatingSeries& s, const PosTol& eps, std::uint64_t cap) {
  cap = effective_cap(cap);
  PartialSum result;
  auto cursor = s.terms.cursor();
  for (;;) {
    const Rational t = cursor.next();
    if (abs(t) <= eps.value()) return result;
    if (result.terms == cap) exceeded("sum_alternating", cap, eps);
    result.value += t;
    ++result.terms;
  }
}

PartialSum sum_subgeometric(const SubGeometricSeries& s, const PosTol& eps, std::uint64_t cap) {
  if (s.ratio.sign() <= 0 || s.ratio >= 1)
    throw std::invalid_argument("sum_subgeometric: ratio must lie in (0, 1), got " + s.ratio.to_string());
  cap = effective_cap(cap);
  const Rational tail_factor = s.ratio / (1 - s.ratio);
  PartialSum result;
  auto cursor = s.terms.cursor();
  for (;;) {
    if (result.terms == cap) exceeded("sum_subgeometric", cap, eps);
    const Rational t = cursor.next();
    result.value += t;
    ++result.terms;
    if (abs(t) * tail_factor <= eps.value()) return result;
  }
}

std::uint64_t term_cap(const Rational& lead, const Rational& q, const PosTol& eps) {
  if (q.sign() <= 0 || q >= 1) throw std::invalid_argument("term_cap: ratio bound must lie in (0, 1)");
  if (lead.is_zero()) return 2;
  const double tail = std::max(0.0, log2_of(q / (1 - q)));
  const double need = log2_of(abs(lead)) + tail - log2_of(eps.value());
  const double per_term = -log2_of(q);
  const double n = std::max(0.0, std::ceil(need / per_term));
  return static_cast<std::uint64_t>(n) + 2;
}

bool alternating_contract_holds(const AlternatingSeries& s, std::uint64_t prefix) {
  auto cursor = s.terms.cursor();
  Rational prev = cursor.next();
  for (std::uint64_t i = 1; i < prefix; ++i) {
    const Rational t = cursor.next();
    if (abs(t) > abs(prev)) return false;
    if (!t.is_zero() && !prev.is_zero() && t.sign() == prev.sign()) return false;
    prev = t;
  }
  return true;
}

bool subgeometric_contract_holds(const SubGeometricSeries& s, std::uint64_t prefix) {
  auto cursor = s.terms.cursor();
  Rational prev = cursor.next();
  for (std::uint64_t i = 1; i < prefix; ++i) {
    const Rational t = cursor.next();
    if (abs(t) > s.ratio * abs(prev)) return false;
    prev = t;
  }
  return true;
}

}  // namespace xreal::series
