#pragma once

#include <string>
#include <utility>

#include "alphacf/cf_string.hpp"
#include "alphacf/surd.hpp"

namespace alphacf {

/// 0.preperiod(period)^inf in base 2; bits are '0'/'1' characters.
///
/// Normalized to a primitive period and a minimal preperiod, so equal
/// expansions compare equal. The two expansions of a dyadic rational are
/// kept distinct.
class BinaryAngle {
 public:
  BinaryAngle(std::string preperiod, std::string period);

  const std::string& preperiod() const { return preperiod_; }
  const std::string& period() const { return period_; }

  char bit(std::size_t i) const;
  std::string take(std::size_t n) const;
  Rational value() const;

  friend bool operator==(const BinaryAngle&, const BinaryAngle&) = default;

  /// "0.01(10)"
  std::string to_string() const;

 private:
  std::string preperiod_;
  std::string period_;
};

/// [0;a1,a2,...] -> 0.0 1^a1 0^a2 1^a3 ...
///
/// A finite expansion ends with an infinite run of the bit opposite to its
/// last block, so 0 -> 0.0(1) = 1/2 and 1 = [0;1] -> 0.01(0) = 1/4.
/// Rationals use the Euclidean expansion.
BinaryAngle phi(const PeriodicCF& x);
BinaryAngle phi(const Rational& x);
BinaryAngle phi(const Surd& x);

/// The bits 0 1^a1 0^a2 ... determined by a finite prefix of the expansion.
std::string phi_prefix(const CFString& prefix);

/// Sigma0 = 0 1^b1 0^b2 ... with the last block shortened by one, for
/// r = [0;b1..bn] in Q_E; Sigma1 is its complement.
std::pair<std::string, std::string> root_angles(const Rational& r);

/// Substitutes 0 -> sigma0 and 1 -> sigma1.
std::string tau_w(const std::string& sigma0, const std::string& sigma1, const std::string& bits);
BinaryAngle tau_w(const std::string& sigma0, const std::string& sigma1, const BinaryAngle& theta);

/// T^(k+1)(theta) <= T(theta) for all k >= 1, with T(x) = min(2x, 2-2x).
/// Iterates exactly until the orbit cycles; a nonzero k_max stops earlier.
bool is_real_ray(const BinaryAngle& theta, std::size_t k_max = 0);

/// tau_W(phi(x_K)) against phi(tau_r(x_K)) on the first `bits` bits, where
/// x_K is `prefix` (at least `bits` digits is always enough).
bool commutation_check(const Rational& r, const CFString& prefix, std::size_t bits);

/// Exact form: compares the angle values of tau_W(phi(x)) and phi(tau_r(x)).
bool commutation_check(const Rational& r, const Surd& x);

}  // namespace alphacf
