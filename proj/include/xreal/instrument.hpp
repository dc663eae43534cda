/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <cstdint>

namespace xreal {

/// Sizes of the rational answers returned by real-number queries.
struct AnswerStats {
  std::uint64_t answers = 0;
  std::size_t peak_denominator_bits = 0;
  std::size_t peak_numerator_bits = 0;
};

/// While alive, records every rational answer produced on this thread.
/// Scopes nest; the innermost one receives the observations.
class ScopedAnswerStats {
 public:
  ScopedAnswerStats();
  ~ScopedAnswerStats();
  ScopedAnswerStats(const ScopedAnswerStats&) = delete;
  ScopedAnswerStats& operator=(const ScopedAnswerStats&) = delete;

  const AnswerStats& stats() const { return stats_; }

 private:
  friend void record_answer_bits(std::size_t, std::size_t);
  AnswerStats stats_;
  ScopedAnswerStats* previous_;
};

}  // namespace xreal
