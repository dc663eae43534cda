/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "xreal/elementary.hpp"
#include "xreal/expr.hpp"
#include "xreal/real.hpp"

namespace xreal {

/// An expression violates (or cannot be shown to satisfy) the side condition
/// of a partial function such as ln or division.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct SearchSettings {
  PosTol delta0{Rational(1)};
  std::size_t max_iters = 64;
};

struct EvalOptions {
  ElementaryOptions elementary;
  /// Used when discovering witnesses for ln and division.
  SearchSettings witness_search;
};

/// Builds the real denoted by e. Side conditions of ln(u) and a / u are
/// discharged by a sign search on u; throws DomainError when u is provably
/// on the wrong side or the search is inconclusive.
Real eval(const Expr& e, const EvalOptions& opts = {});

enum class ProofStatus { proved, disproved, inconclusive };

struct ProofOutcome {
  ProofStatus status = ProofStatus::inconclusive;
  std::optional<PositivityWitness> witness;  // set when proved
  std::vector<PosTol> probes;

  std::size_t iterations() const { return probes.size(); }
};

/// Semi-decides 0 < e. DomainError from evaluation propagates.
ProofOutcome prove_pos(const Expr& e, const SearchSettings& search = {}, const EvalOptions& opts = {});

/// Semi-decides lhs < rhs as 0 < rhs - lhs.
ProofOutcome prove_lt(const Expr& lhs, const Expr& rhs, const SearchSettings& search = {},
                      const EvalOptions& opts = {});

}  // namespace xreal
