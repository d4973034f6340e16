#pragma once

#include <optional>
#include <vector>

#include "alphacf/cf_string.hpp"
#include "alphacf/surd.hpp"

namespace alphacf {

/// W_r = [omega, alpha0) with omega = tau_r(0) = [0; S1 S0-bar].
struct TuningWindow {
  Rational r;
  Surd omega;
  Surd alpha0;
  bool neutral{false};  // matching index of r is zero

  /// omega <= x < alpha0.
  bool contains(const Surd& x) const;
};

/// Substitutes each digit a of `a_string` by S1 S0^(a-1), the expansions of r.
/// A non-extremal r is accepted with a warning on std::clog.
CFString tau_string(const Rational& r, const CFString& a_string);

/// tau_r on [0,1]. Rationals go through their even-length expansion;
/// irrational surds map preperiod and period separately; tau_r(0) = omega.
Surd tau_value(const Rational& r, const Surd& x);
Rational tau_value(const Rational& r, const Rational& x);

TuningWindow tuning_window(const Rational& r);

enum class Nesting { disjoint, r_inside_s, s_inside_r, equal };

struct NestingResult {
  Nesting relation{Nesting::disjoint};
  /// For r_inside_s, p with r = tau_s(p); for s_inside_r, p with s = tau_r(p).
  std::optional<Rational> witness;
};

NestingResult window_nesting(const Rational& r, const Rational& s);

/// Reads `a_string` as a concatenation of blocks S1 S0^k of r and returns
/// the digits k+1, or nullopt when no such parse exists.
std::optional<CFString> tau_inverse_string(const Rational& r, const CFString& a_string);

/// Untuned factors of r, outermost first: r = tau_{f[0]}(tau_{f[1]}(... f.back())).
std::vector<Rational> untuned_factorization(const Rational& r);

bool is_untuned(const Rational& r);

/// Composition tau_{f[0]} o ... o tau_{f[k-1]} collapsed to a single generator.
Rational compose_generators(const std::vector<Rational>& factors);

}  // namespace alphacf
