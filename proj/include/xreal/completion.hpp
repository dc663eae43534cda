/* SPDX-License-Identifier: Apache-2.0 */

// The completion monad over an approximable carrier X.
//
// A RegularFn<X> answers queries at any positive tolerance eps with a point of
// X, and any two answers are coherent: ball(e1 + e2, x(e1), x(e2)). Functions
// enter the completion as UcFn values (a function plus its modulus of
// continuity) and are lifted with map_prime / bind_prime. Nothing here stores
// proofs; the ball relation is a test-time predicate (see Ball<X> below).

#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "xreal/rational.hpp"

namespace xreal {

/// Hook called with every answer a RegularFn returns. The Rational overload
/// lives in instrument.hpp; everything else is a no-op.
template <class T>
inline void observe_answer(const T&) {}

void observe_answer(const Rational& q);

template <class X>
class RegularFn {
 public:
  using value_type = X;
  using Query = std::function<X(const PosTol&)>;

  explicit RegularFn(Query query) : query_(std::make_shared<const Query>(std::move(query))) {}

  X query(const PosTol& eps) const {
    X answer = (*query_)(eps);
    observe_answer(answer);
    return answer;
  }

 private:
  std::shared_ptr<const Query> query_;
};

/// A function X -> Y together with a modulus of continuity: whenever a and b
/// are within modulus(eps), apply(a) and apply(b) are within eps.
template <class X, class Y>
struct UcFn {
  std::function<Y(const X&)> apply;
  std::function<ExtTol(const PosTol&)> modulus;

  Y operator()(const X& a) const { return apply(a); }
};

/// Tolerance used to query an argument when the modulus answers infinity.
inline PosTol unbounded_query_tolerance() { return PosTol(Rational(1)); }

inline std::function<ExtTol(const PosTol&)> identity_modulus() {
  return [](const PosTol& eps) { return ExtTol(eps); };
}

template <class X>
RegularFn<X> unit(X a) {
  return RegularFn<X>([a = std::move(a)](const PosTol&) { return a; });
}

template <class X>
RegularFn<X> join(RegularFn<RegularFn<X>> x) {
  return RegularFn<X>([x = std::move(x)](const PosTol& eps) {
    const PosTol h = eps.half();
    return x.query(h).query(h);
  });
}

/// map' for prelength carriers: result(eps) = f(x(mu(eps))).
template <class X, class Y>
RegularFn<Y> map_prime(UcFn<X, Y> f, RegularFn<X> x) {
  return RegularFn<Y>([f = std::move(f), x = std::move(x)](const PosTol& eps) {
    const ExtTol d = f.modulus(eps);
    return f.apply(x.query(d.is_finite() ? d.finite() : unbounded_query_tolerance()));
  });
}

/// map for arbitrary carriers: result(eps) = f(x(mu(eps) / 2)).
template <class X, class Y>
RegularFn<Y> map_general(UcFn<X, Y> f, RegularFn<X> x) {
  return RegularFn<Y>([f = std::move(f), x = std::move(x)](const PosTol& eps) {
    const ExtTol d = f.modulus(eps);
    return f.apply(x.query(d.is_finite() ? d.finite().half() : unbounded_query_tolerance()));
  });
}

template <class X, class Y>
RegularFn<Y> bind_prime(UcFn<X, RegularFn<Y>> f, RegularFn<X> x) {
  return join(map_prime(std::move(f), std::move(x)));
}

template <class X, class Y>
RegularFn<Y> ap(RegularFn<UcFn<X, Y>> f, RegularFn<X> x) {
  return RegularFn<Y>([f = std::move(f), x = std::move(x)](const PosTol& eps) {
    const PosTol h = eps.half();
    return map_general(f.query(h), x).query(h);
  });
}

/// Curried binary lift. The outer modulus is with respect to the sup-norm on
/// the inner functions.
template <class X, class Y, class Z>
RegularFn<Z> map2(UcFn<X, UcFn<Y, Z>> f, RegularFn<X> x, RegularFn<Y> y) {
  return ap(map_general(std::move(f), std::move(x)), std::move(y));
}

/// Caches the finest answer seen so far and serves it for any query at an
/// equal or coarser tolerance.
template <class X>
RegularFn<X> memoize(RegularFn<X> x) {
  struct Cache {
    std::mutex mutex;
    std::optional<std::pair<PosTol, X>> finest;
  };
  auto cache = std::make_shared<Cache>();
  return RegularFn<X>([x = std::move(x), cache](const PosTol& eps) {
    {
      std::lock_guard lock(cache->mutex);
      if (cache->finest && cache->finest->first <= eps) return cache->finest->second;
    }
    X answer = x.query(eps);
    std::lock_guard lock(cache->mutex);
    if (!cache->finest || eps < cache->finest->first) cache->finest.emplace(eps, answer);
    return answer;
  });
}

enum class Verdict { consistent, refuted };

/// Sampled ball predicate per carrier. Exact on Rational, a necessary
/// condition on completions.
template <class X>
struct Ball;

template <>
struct Ball<Rational> {
  static bool check(const ExtTol& r, const Rational& a, const Rational& b, std::span<const PosTol>) {
    return !r.is_finite() || abs(a - b) <= r.finite().value();
  }
};

template <class X>
struct Ball<RegularFn<X>> {
  static bool check(const ExtTol& r, const RegularFn<X>& x, const RegularFn<X>& y,
                    std::span<const PosTol> probes) {
    if (!r.is_finite()) return true;
    std::vector<X> xs, ys;
    xs.reserve(probes.size());
    ys.reserve(probes.size());
    for (const auto& d : probes) {
      xs.push_back(x.query(d));
      ys.push_back(y.query(d));
    }
    for (std::size_t i = 0; i < probes.size(); ++i)
      for (std::size_t j = 0; j < probes.size(); ++j)
        if (!Ball<X>::check(ExtTol(probes[i] + r.finite() + probes[j]), xs[i], ys[j], probes)) return false;
    return true;
  }
};

/// Refuted iff some probe pair violates |x(d1) - y(d2)| <= d1 + eps + d2
/// (recursively for nested carriers). Consistent is evidence, not proof.
template <class X>
Verdict ball_check(const ExtTol& eps, const RegularFn<X>& x, const RegularFn<X>& y,
                   std::span<const PosTol> probes) {
  if (probes.empty()) throw std::invalid_argument("ball_check: probe list is empty");
  return Ball<RegularFn<X>>::check(eps, x, y, probes) ? Verdict::consistent : Verdict::refuted;
}

/// Sampled regularity: ball(d1 + d2, x(d1), x(d2)) for every probe pair.
template <class X>
Verdict check_regularity(const RegularFn<X>& x, std::span<const PosTol> probes) {
  if (probes.empty()) throw std::invalid_argument("check_regularity: probe list is empty");
  std::vector<X> xs;
  xs.reserve(probes.size());
  for (const auto& d : probes) xs.push_back(x.query(d));
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = 0; j < probes.size(); ++j)
      if (!Ball<X>::check(ExtTol(probes[i] + probes[j]), xs[i], xs[j], probes)) return Verdict::refuted;
  return Verdict::consistent;
}

}  // namespace xreal
