#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alphacf/cf_string.hpp"
#include "alphacf/quadratic_intervals.hpp"
#include "alphacf/surd.hpp"
#include "alphacf/tuning.hpp"

namespace alphacf {

// Local behaviour of the entropy h near a parameter alpha.

struct MonotoneIncreasing {
  std::optional<QuadraticInterval> interval;
};
struct MonotoneDecreasing {
  std::optional<QuadraticInterval> interval;  // empty beyond g
};
struct MonotoneConstantOnInterval {
  QuadraticInterval interval;
};
/// alpha = tau_r(g); r is empty for alpha = g itself.
struct PhaseTransition {
  std::optional<Rational> r;
  std::vector<Rational> chain;
};
/// alpha lies in the interior of the neutral window.
struct LocallyConstant {
  TuningWindow window;
  std::vector<Rational> chain;
};
struct Mixed {
  std::vector<Rational> chain;
  Surd pullback;  // 0 or an untuned element of E other than g
};
struct Unclassified {
  std::string reason;
};

using MonotonicityClass = std::variant<MonotoneIncreasing, MonotoneDecreasing, MonotoneConstantOnInterval,
                                       PhaseTransition, LocallyConstant, Mixed, Unclassified>;

std::string class_tag(const MonotonicityClass& c);

/// alpha = tau_{chain[0]} o ... o tau_{chain.back()}(pullback), each factor untuned.
struct RenormalizationChain {
  std::vector<Rational> chain;
  Surd pullback;
  bool capped{false};  // stopped at the level cap
};

inline constexpr std::size_t kChainCap = 64;

/// Requires alpha in E, irrational, alpha <= g.
RenormalizationChain renormalization_chain(const Surd& alpha);

/// The outermost untuned r with alpha = tau_r(y) for some y, and that y.
struct TuningParse {
  Rational r;
  Surd pullback;
};
std::optional<TuningParse> outermost_tuning(const Surd& alpha);

MonotonicityClass classify_parameter(const Surd& alpha);

struct PlateauNR {
  Rational r;
};
struct PlateauFR {
  Rational r0;  // neutral, untuned, innermost
  Rational r1;  // composition of the outer factors, index nonzero
  std::vector<Rational> factors;
};
struct NotPlateau {
  std::string reason;
};
using PlateauVerdict = std::variant<PlateauNR, PlateauFR, NotPlateau>;

PlateauVerdict plateau_verdict(const Rational& r);

/// Even length and S << B for every proper non-empty suffix B.
bool is_dominant(const CFString& s);

/// S0^m B for a dominant S0 and an even-length proper suffix B of it.
CFString extend_dominant(const CFString& s0, const CFString& b, long m);

struct WitnessFamilies {
  QuadraticInterval s;  // [0;n,1], index n-1
  QuadraticInterval t;  // [0;n,n], index 0
  QuadraticInterval u;  // [0;n+1,n,1,n], index 2-n
};

WitnessFamilies witness_families(long n);

struct DimensionBounds {
  double lower{0};
  double upper{0};
  std::vector<CFString> alphabet;
  std::size_t n{0};
  double m1{0};  // smallest contraction factor, min 1/(4 q^2)
  double m2{0};  // largest contraction factor, max 1/q^2
};

DimensionBounds dimension_bounds(const std::vector<CFString>& alphabet);

/// Maximal quadratic intervals of each index sign inside (alpha - radius, alpha + radius),
/// searched up to a denominator bound.
struct MixedWitnesses {
  std::optional<QuadraticInterval> increasing;
  std::optional<QuadraticInterval> constant;
  std::optional<QuadraticInterval> decreasing;
  double radius{0};
  long max_denominator{0};
  bool complete() const { return increasing && constant && decreasing; }
};

MixedWitnesses mixed_witnesses(const Surd& alpha, double radius, long max_denominator);

}  // namespace alphacf
