/* SPDX-License-Identifier: Apache-2.0 */

// Certified partial sums. Both summation routines return a rational within
// eps of the infinite sum, provided the series honours its contract:
//  - alternating: signs alternate and magnitudes are nonincreasing to 0;
//  - sub-geometric: |t(i+1)| <= r |t(i)| with 0 < r < 1.
// Contracts are the caller's responsibility; the *_contract_holds helpers
// only sample a prefix.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "xreal/rational.hpp"

namespace xreal::series {

/// Hard ceiling on consumed terms regardless of the caller's cap.
inline constexpr std::uint64_t kTermCeiling = 1'000'000;

/// Raised when a summation needs more terms than its cap allows.
class NonTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Term stream t(0), t(1), ... given either by index or by a ratio
/// recurrence t(i+1) = t(i) * ratio(i).
class Terms {
 public:
  using ByIndex = std::function<Rational(std::uint64_t)>;

  static Terms indexed(ByIndex term);
  static Terms recurrence(Rational first, ByIndex ratio);

  class Cursor {
   public:
    Rational next();

   private:
    friend class Terms;
    explicit Cursor(const Terms& terms) : terms_(&terms) {}
    const Terms* terms_;
    std::uint64_t index_ = 0;
    Rational current_;
  };

  Cursor cursor() const { return Cursor(*this); }
  /// O(i) for recurrences.
  Rational at(std::uint64_t i) const;

 private:
  ByIndex by_index_;
  Rational first_;
  ByIndex ratio_;
};

struct AlternatingSeries {
  Terms terms;
};

struct SubGeometricSeries {
  Terms terms;
  Rational ratio;  // 0 < ratio < 1
};

struct PartialSum {
  Rational value;
  std::uint64_t terms = 0;  // number of terms added
};

/// Adds terms while |t(i)| > eps; the first term with |t(i)| <= eps bounds
/// the remaining error. Throws NonTermination past `cap` terms.
PartialSum sum_alternating(const AlternatingSeries& s, const PosTol& eps, std::uint64_t cap);

/// Adds t(0)..t(n) for the first n with |t(n)| r / (1 - r) <= eps.
/// Throws NonTermination past `cap` terms and std::invalid_argument for r
/// outside (0, 1).
PartialSum sum_subgeometric(const SubGeometricSeries& s, const PosTol& eps, std::uint64_t cap);

/// Analytic term cap for a series with |t(0)| <= lead and consecutive ratio
/// at most q < 1: enough terms for both stop rules above.
std::uint64_t term_cap(const Rational& lead, const Rational& q, const PosTol& eps);

/// Sampled contract checks over the first `prefix` terms.
bool alternating_contract_holds(const AlternatingSeries& s, std::uint64_t prefix);
bool subgeometric_contract_holds(const SubGeometricSeries& s, std::uint64_t prefix);

}  // namespace xreal::series
