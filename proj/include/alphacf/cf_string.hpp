#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace alphacf {

using BigInt = mpz_class;
using Rational = mpq_class;
using Digit = std::int64_t;

/// Builds p/q in lowest terms with a positive denominator.
Rational make_rational(const BigInt& p, const BigInt& q);

/// Parses "p/q" or an integer.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// A finite string of positive partial quotients.
///
/// The empty string is admitted; it acts as the identity of the Möbius
/// action and is rejected by the order predicates.
class CFString {
 public:
  CFString() = default;
  CFString(std::initializer_list<Digit> digits);
  explicit CFString(std::vector<Digit> digits);

  const std::vector<Digit>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  bool even() const { return digits_.size() % 2 == 0; }
  bool odd() const { return !even(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  Digit front() const { return digits_.front(); }
  Digit back() const { return digits_.back(); }

  /// Sum of the digits.
  BigInt norm1() const;

  CFString prefix(std::size_t n) const;
  /// Digits from position `start` to the end.
  CFString suffix_from(std::size_t start) const;
  bool starts_with(const CFString& other) const;
  bool ends_with(const CFString& other) const;
  CFString power(std::size_t k) const;

  CFString& operator+=(const CFString& other);
  friend CFString operator+(CFString lhs, const CFString& rhs) { return lhs += rhs; }
  friend bool operator==(const CFString&, const CFString&) = default;
  /// Lexicographic on the raw digits; only for use as a container key.
  friend auto operator<=>(const CFString&, const CFString&) = default;

  /// "(3,2,1)"
  std::string to_string() const;

 private:
  std::vector<Digit> digits_;
};

/// Matrix of the Möbius map f_S(x) = (p_prev x + p) / (q_prev x + q).
///
/// For S = (a_1..a_n), p/q = [0;a_1..a_n] and p_prev/q_prev is the
/// convergent of order n-1. The empty string gives the identity.
struct ConvergentPair {
  BigInt p_prev{1};
  BigInt q_prev{0};
  BigInt p{0};
  BigInt q{1};
  std::size_t length{0};

  void push(Digit a);
  /// q p_prev - p q_prev, which equals (-1)^length.
  BigInt determinant() const { return q * p_prev - p * q_prev; }
};

ConvergentPair convergents(const CFString& s);

struct RationalExpansions {
  CFString even;  // S0
  CFString odd;   // S1
};

/// The two expansions of r in (0,1): S0 of even length, S1 of odd length.
RationalExpansions expansions_of_rational(const Rational& r);

/// Euclidean expansion of r in (0,1], last digit >= 2 unless r = 1.
CFString canonical_expansion(const Rational& r);

/// [0;S] in lowest terms. Requires S non-empty.
Rational value_of(const CFString& s);
BigInt q_of(const CFString& s);

/// The order `<` on strings of equal length (alternating comparison).
bool lt_same_length(const CFString& s, const CFString& t);

/// The partial order `<<`. False when one string is a prefix of the other.
bool ll(const CFString& s, const CFString& t);

/// Alternating digit sum a_1 - a_2 + a_3 - ...
BigInt matching_index(const CFString& s);
/// Matching index of the even-length expansion of r.
BigInt matching_index(const Rational& r);

/// f_S(x) for any field-like T (Rational, double, Surd).
template <class T>
T mobius_apply(const ConvergentPair& m, const T& x) {
  return (T(m.p_prev) * x + T(m.p)) / (T(m.q_prev) * x + T(m.q));
}

template <class T>
T mobius_apply(const CFString& s, const T& x) {
  return mobius_apply(convergents(s), x);
}

double mobius_apply(const CFString& s, double x);
/// f_S'(x) = (-1)^n / (q_prev x + q)^2.
double mobius_derivative(const CFString& s, double x);

}  // namespace alphacf
