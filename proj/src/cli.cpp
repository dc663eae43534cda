/* SPDX-License-Identifier: Apache-2.0 */

#include "xreal/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>

#include "xreal/parser.hpp"

namespace xreal::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::microseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

std::string format_ms(std::chrono::microseconds us) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << static_cast<double>(us.count()) / 1000.0 << " ms";
  return os.str();
}

const char* status_name(ProofStatus s) {
  switch (s) {
    case ProofStatus::proved: return "proved";
    case ProofStatus::disproved: return "disproved";
    case ProofStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

std::optional<Integer> scaled_digits(std::string_view s, std::size_t& scale) {
  std::string digits;
  scale = 0;
  bool seen_dot = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '-' && i == 0) {
      digits.push_back(c);
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_dot) ++scale;
    } else {
      return std::nullopt;
    }
  }
  if (digits.empty() || digits == "-") return std::nullopt;
  return parse_integer(digits);
}

}  // namespace

RunReport cmd_approx(std::string_view expression, std::size_t digits, bool compress) {
  const auto start = Clock::now();
  EvalOptions opts;
  opts.elementary.compress = compress;
  RunReport report{std::string(expression), digits, {}, {}, {}};
  report.value = to_decimal(eval(parse_expr(expression), opts), digits);
  report.elapsed = since(start);
  return report;
}

RunReport cmd_prove(std::string_view statement, const SearchSettings& search) {
  const auto start = Clock::now();
  const Inequality ineq = parse_inequality(statement);
  const bool less = ineq.op == Comparison::less;
  RunReport report{std::string(statement), 0, {}, {}, {}};
  report.proof = less ? prove_lt(ineq.lhs, ineq.rhs, search) : prove_lt(ineq.rhs, ineq.lhs, search);
  report.value = status_name(report.proof->status);
  report.elapsed = since(start);
  return report;
}

const std::vector<BenchCase>& bench_cases() {
  static const std::vector<BenchCase> cases{
      {"sqrt(e/pi)", "0.93019136710263285866"},
      {"sin((e+1)^3)", "0.90949524105726624718"},
      {"exp(exp(exp(1/2)))", "181.33130360854569351505"},
  };
  return cases;
}

DigitMatch compare_digits(std::string_view actual, std::string_view expected) {
  if (actual == expected) return DigitMatch::exact;
  std::size_t sa = 0, se = 0;
  const auto a = scaled_digits(actual, sa);
  const auto b = scaled_digits(expected, se);
  if (!a || !b || sa != se) return DigitMatch::mismatch;
  const Integer diff = *a - *b;
  return (diff == 1 || diff == -1) ? DigitMatch::last_digit : DigitMatch::mismatch;
}

std::vector<RunReport> cmd_bench() {
  std::vector<RunReport> reports;
  for (const auto& c : bench_cases()) reports.push_back(cmd_approx(c.expression, kBenchDigits));
  return reports;
}

namespace {

void print_bench(const std::vector<RunReport>& reports, bool porcelain, std::ostream& out) {
  const auto& cases = bench_cases();
  if (porcelain) {
    for (const auto& r : reports)
      out << r.expression << '\t' << r.digits << '\t' << r.value << '\t' << r.elapsed.count() << '\n';
    return;
  }
  out << std::left << std::setw(22) << "expression" << std::setw(26) << "value" << std::setw(26) << "expected"
      << std::setw(12) << "match" << std::setw(8) << "error" << "time\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    const DigitMatch m = compare_digits(r.value, cases[i].expected);
    const char* match = m == DigitMatch::exact ? "exact" : (m == DigitMatch::last_digit ? "last-digit" : "MISMATCH");
    out << std::left << std::setw(22) << r.expression << std::setw(26) << r.value << std::setw(26)
        << cases[i].expected << std::setw(12) << match << std::setw(8) << ("1e-" + std::to_string(r.digits))
        << format_ms(r.elapsed) << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact real arithmetic: approximate expressions and prove strict inequalities"};
  app.require_subcommand(1);

  auto* approx = app.add_subcommand("approx", "Approximate an expression to N decimal digits");
  std::string approx_expr;
  std::size_t digits = 0;
  std::string compress = "on";
  approx->add_option("expr", approx_expr, "Expression, e.g. \"sqrt(e/pi)\"")->required();
  approx->add_option("--digits", digits, "Fractional decimal digits")->required()->check(CLI::PositiveNumber);
  approx->add_option("--compress", compress, "Dyadic compression of intermediates")
      ->check(CLI::IsMember({"on", "off"}));

  auto* prove = app.add_subcommand("prove", "Prove a strict inequality \"<lhs> < <rhs>\" or \"<lhs> > <rhs>\"");
  std::string statement;
  std::string delta0 = "1";
  std::size_t max_iters = 64;
  prove->add_option("statement", statement, "Inequality")->required();
  prove->add_option("--delta0", delta0, "Initial probe tolerance (rational)");
  prove->add_option("--max-iters", max_iters, "Number of halving probes")->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "Reference approximations to 20 digits");
  bool porcelain = false;
  bench->add_flag("--porcelain", porcelain, "Tab-separated output: expr, digits, value, micros");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*approx) {
      const RunReport r = cmd_approx(approx_expr, digits, compress == "on");
      out << r.value << '\n';
      err << "elapsed: " << format_ms(r.elapsed) << '\n';
      return 0;
    }
    if (*prove) {
      SearchSettings search;
      try {
        search.delta0 = PosTol(Rational::parse(delta0));
      } catch (const std::exception& e) {
        err << "error: --delta0: " << e.what() << '\n';
        return kInputError;
      }
      search.max_iters = max_iters;
      const RunReport r = cmd_prove(statement, search);
      const ProofOutcome& p = *r.proof;
      out << r.value << ": " << r.expression << '\n';
      if (p.witness) out << "witness: " << p.witness->epsilon.value() << '\n';
      out << "iterations: " << p.iterations() << '\n';
      err << "elapsed: " << format_ms(r.elapsed) << '\n';
      switch (p.status) {
        case ProofStatus::proved: return kProved;
        case ProofStatus::disproved: return kDisproved;
        case ProofStatus::inconclusive: return kInconclusive;
      }
    }
    if (*bench) {
      print_bench(cmd_bench(), porcelain, out);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace xreal::cli
