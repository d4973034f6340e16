#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "alphacf/cf_string.hpp"
#include "alphacf/execution.hpp"
#include "alphacf/surd.hpp"

namespace alphacf {

/// The open interval I_r = (alpha1, alpha0) with alpha_i = [0; S_i-bar].
struct QuadraticInterval {
  Rational r;
  CFString s0;
  CFString s1;
  Surd alpha1;
  Surd alpha0;
  BigInt index;  // matching index of r, equal to m - n
  BigInt n;      // sum of digits at even positions of S0
  BigInt m;      // sum of digits at odd positions of S0

  bool contains(const Surd& x) const;
  PeriodicCF alpha1_cf() const { return PeriodicCF({}, s1); }
  PeriodicCF alpha0_cf() const { return PeriodicCF({}, s0); }
};

QuadraticInterval build_interval(const Rational& r);

/// Splitting criterion: every split S = AB has AB < BA, or A = B with |A| odd.
bool satisfies_splitting_criterion(const CFString& s);

/// Membership in Q_E, decided on the even-length expansion.
bool is_extremal(const Rational& r);

/// All r in Q_E with denominator <= max_denominator, sorted by r.
std::vector<QuadraticInterval> enumerate_qe(long max_denominator, Execution exec = Execution::parallel);

/// Same filter without building intervals; sorted.
std::vector<Rational> enumerate_qe_rationals(long max_denominator, Execution exec = Execution::parallel);

/// The minimal-denominator rational in the open interval (lo, hi).
Rational pseudocenter(const Surd& lo, const Surd& hi);

/// x in E, i.e. G^k(x) >= x for every k. Exact for quadratic irrationals.
bool in_bifurcation_set(const Surd& x);

/// x in B(t), i.e. G^k(x) >= t for every k.
bool in_b_t(const Surd& x, const Surd& t);

struct NotFound {};
struct Undecided {
  BigInt denominator_bound;
};

using IntervalSearch = std::variant<QuadraticInterval, NotFound, Undecided>;

/// Stern-Brocot descent toward alpha in (0, g) for the maximal I_r
/// containing it. Exact inputs are never Undecided: membership in E is
/// decided first and reported as NotFound.
IntervalSearch maximal_interval_containing(const Surd& alpha);

/// Floating-point variant; Undecided once denominators exceed the bound.
IntervalSearch maximal_interval_containing(double alpha, long max_denominator = 1'000'000);

}  // namespace alphacf
