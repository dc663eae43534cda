/* SPDX-License-Identifier: Apache-2.0 */

#include "xreal/instrument.hpp"

#include <algorithm>

#include "xreal/completion.hpp"

namespace xreal {

namespace {
thread_local ScopedAnswerStats* active_stats = nullptr;
}

ScopedAnswerStats::ScopedAnswerStats() : previous_(active_stats) { active_stats = this; }

ScopedAnswerStats::~ScopedAnswerStats() { active_stats = previous_; }

void record_answer_bits(std::size_t num_bits, std::size_t den_bits) {
  auto& s = active_stats->stats_;
  ++s.answers;
  s.peak_numerator_bits = std::max(s.peak_numerator_bits, num_bits);
  s.peak_denominator_bits = std::max(s.peak_denominator_bits, den_bits);
}

void observe_answer(const Rational& q) {
  if (active_stats == nullptr) return;
  record_answer_bits(numerator_bits(q), denominator_bits(q));
}

}  // namespace xreal
