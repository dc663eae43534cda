/* SPDX-License-Identifier: Apache-2.0 */

#include "xreal/prover.hpp"

#include <unordered_map>

namespace xreal {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

class Evaluator {
 public:
  explicit Evaluator(const EvalOptions& opts) : opts_(opts) {}

  Real operator()(const Expr& e) {
    if (auto it = cache_.find(e.identity()); it != cache_.end()) return it->second;
    Real value = memoize(build(e));
    cache_.emplace(e.identity(), value);
    return value;
  }

 private:
  const EvalOptions& opts_;
  std::unordered_map<const Expr::Node*, Real> cache_;

  SignSearch sign_of(const Real& x) const {
    return find_positivity_witness(x, opts_.witness_search.delta0, opts_.witness_search.max_iters);
  }

  Real build(const Expr& e) {
    const auto& el = opts_.elementary;
    return std::visit(
        Overloaded{
            [](const Literal& l) { return constant(l.value); },
            [&](const Constant& c) { return c.kind == ConstantKind::pi ? pi(el) : euler(el); },
            [&](const Unary& u) { return unary(u, (*this)(u.arg)); },
            [&](const Binary& b) {
              const Real lhs = (*this)(b.lhs);
              const Real rhs = (*this)(b.rhs);
              switch (b.op) {
                case BinaryOp::add: return add(lhs, rhs);
                case BinaryOp::sub: return sub(lhs, rhs);
                case BinaryOp::mul: return mul(lhs, rhs);
                case BinaryOp::div: return divide(lhs, rhs, b.rhs);
              }
              throw std::logic_error("unknown binary operator");
            },
            [&](const Power& p) { return pow((*this)(p.base), p.exponent); },
        },
        e.node().value);
  }

  Real unary(const Unary& u, const Real& x) const {
    const auto& el = opts_.elementary;
    switch (u.op) {
      case UnaryOp::neg: return neg(x);
      case UnaryOp::sin: return sin(x, el);
      case UnaryOp::cos: return cos(x, el);
      case UnaryOp::atan: return atan(x, el);
      case UnaryOp::exp: return exp(x, el);
      case UnaryOp::sqrt: return sqrt(x);
      case UnaryOp::ln: {
        const SignSearch s = sign_of(x);
        if (s.is_negative()) throw DomainError("ln: argument provably <= 0: " + u.arg.to_string());
        if (s.is_inconclusive())
          throw DomainError("ln: cannot certify domain side condition 0 < " + u.arg.to_string());
        return ln(x, std::get<PositivityWitness>(s.outcome), el);
      }
    }
    throw std::logic_error("unknown unary operator");
  }

  Real divide(const Real& num, const Real& den, const Expr& den_expr) const {
    const SignSearch s = sign_of(den);
    if (s.is_positive()) return mul(num, inv(den, std::get<PositivityWitness>(s.outcome)));
    if (s.is_negative()) return mul(num, inv(den, std::get<NegativityWitness>(s.outcome)));
    throw DomainError("division: cannot certify domain side condition " + den_expr.to_string() + " != 0");
  }
};

}  // namespace

Real eval(const Expr& e, const EvalOptions& opts) { return Evaluator(opts)(e); }

ProofOutcome prove_pos(const Expr& e, const SearchSettings& search, const EvalOptions& opts) {
  const SignSearch s = find_positivity_witness(eval(e, opts), search.delta0, search.max_iters);
  ProofOutcome outcome;
  outcome.probes = s.probes;
  if (s.is_positive()) {
    outcome.status = ProofStatus::proved;
    outcome.witness = std::get<PositivityWitness>(s.outcome);
  } else if (s.is_negative()) {
    outcome.status = ProofStatus::disproved;
  }
  return outcome;
}

ProofOutcome prove_lt(const Expr& lhs, const Expr& rhs, const SearchSettings& search, const EvalOptions& opts) {
  return prove_pos(expr::sub(rhs, lhs), search, opts);
}

}  // namespace xreal
