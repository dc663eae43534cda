/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xreal/prover.hpp"

namespace xreal::cli {

/// Exit codes of `prove`; approx/bench use ok and error only.
enum ExitCode : int { kProved = 0, kDisproved = 1, kInconclusive = 2, kInputError = 3 };

struct RunReport {
  std::string expression;
  std::size_t digits = 0;
  std::string value;
  std::chrono::microseconds elapsed{0};
  std::optional<ProofOutcome> proof;
};

/// parse -> eval -> to_decimal. Throws ParseError / DomainError.
RunReport cmd_approx(std::string_view expression, std::size_t digits, bool compress = true);

/// Proves "<lhs> < <rhs>" or "<lhs> > <rhs>". Throws ParseError / DomainError.
RunReport cmd_prove(std::string_view statement, const SearchSettings& search = {});

struct BenchCase {
  std::string_view expression;
  std::string_view expected;
};

/// The three reference approximations, each to 20 digits.
const std::vector<BenchCase>& bench_cases();
inline constexpr std::size_t kBenchDigits = 20;

enum class DigitMatch { exact, last_digit, mismatch };

/// Compares two fixed-point strings of equal scale, allowing one unit in the
/// last place.
DigitMatch compare_digits(std::string_view actual, std::string_view expected);

std::vector<RunReport> cmd_bench();

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xreal::cli
