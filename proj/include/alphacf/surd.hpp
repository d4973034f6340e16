#pragma once

#include <compare>
#include <string>

#include "alphacf/cf_string.hpp"

namespace alphacf {

/// Exact real quadratic number (a + b sqrt(d)) / c.
///
/// Normalized: c > 0, gcd(a, b, c) = 1, and d = 0 whenever b = 0 so that
/// rationals combine with any quadratic field. For b != 0, square factors
/// of d are removed by trial division; when d <= 10^15 this yields the
/// squarefree kernel, beyond that a residual square factor may remain and
/// field identity is decided by a perfect-square test on d1 * d2.
///
/// Arithmetic between surds of different fields throws std::domain_error.
/// Ordering is exact and total across fields: same-field comparisons are
/// algebraic, cross-field comparisons go through continued fractions.
class Surd {
 public:
  Surd() = default;
  Surd(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Surd(const BigInt& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Surd(const Rational& r);  // NOLINT(google-explicit-constructor)
  Surd(BigInt a, BigInt b, BigInt c, BigInt d);

  static Surd sqrt(const BigInt& d);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  Rational to_rational() const;
  int sign() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);
  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }

  Surd reciprocal() const;
  Surd abs() const { return sign() < 0 ? -*this : *this; }

  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);
  friend bool operator==(const Surd& x, const Surd& y);

  /// "(a+b*sqrt(d))/c" or a plain rational.
  std::string to_string() const;

 private:
  void normalize();
  /// Rewrites `o` over this surd's radicand; throws on a field mismatch.
  Surd rebased(const Surd& o) const;

  BigInt a_{0};
  BigInt b_{0};
  BigInt c_{1};
  BigInt d_{0};
};

/// Eventually periodic continued fraction [0; preperiod, (period)].
///
/// After construction the period is primitive and the preperiod minimal.
class PeriodicCF {
 public:
  PeriodicCF(CFString preperiod, CFString period);

  const CFString& preperiod() const { return preperiod_; }
  const CFString& period() const { return period_; }
  bool purely_periodic() const { return preperiod_.empty(); }

  /// i-th partial quotient, 0-based.
  Digit digit(std::size_t i) const;
  /// First n partial quotients.
  CFString take(std::size_t n) const;

  friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;

  /// "[0;3,(2,1)]"
  std::string to_string() const;

 private:
  CFString preperiod_;
  CFString period_;
};

/// Exact value of an eventually periodic continued fraction.
Surd surd_from_periodic(const PeriodicCF& cf);

/// Lagrange expansion of an irrational 0 < x < 1.
PeriodicCF cf_of_surd(const Surd& x);

/// Value ordering of two eventually periodic continued fractions.
std::strong_ordering compare_cf(const PeriodicCF& x, const PeriodicCF& y);

std::strong_ordering surd_compare(const Surd& x, const Surd& y);
BigInt surd_floor(const Surd& x);
/// 1/|x| - c.
Surd surd_recip_shift(const Surd& x, const BigInt& c);

/// Golden mean g = (sqrt 5 - 1)/2 and its square.
Surd golden_mean();
Surd golden_mean_squared();

/// Parses "[0;a1,...,an]", "[0;a1,...,(p1,...,pk)]", "p/q" or an integer.
Surd parse_exact(const std::string& text);
/// Continued fraction literal for values in [0, 1]; "p/q" style otherwise.
std::string format_exact(const Surd& x);

}  // namespace alphacf
