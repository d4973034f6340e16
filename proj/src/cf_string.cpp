#include "alphacf/cf_string.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace alphacf {

Rational make_rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

CFString::CFString(std::initializer_list<Digit> digits) : CFString(std::vector<Digit>(digits)) {}

CFString::CFString(std::vector<Digit> digits) : digits_(std::move(digits)) {
  for (Digit d : digits_) {
    if (d < 1) throw std::domain_error("partial quotients must be positive");
  }
}

BigInt CFString::norm1() const {
  BigInt sum = 0;
  for (Digit d : digits_) sum += static_cast<long>(d);
  return sum;
}

CFString CFString::prefix(std::size_t n) const {
  n = std::min(n, digits_.size());
  return CFString(std::vector<Digit>(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(n)));
}

CFString CFString::suffix_from(std::size_t start) const {
  start = std::min(start, digits_.size());
  return CFString(std::vector<Digit>(digits_.begin() + static_cast<std::ptrdiff_t>(start), digits_.end()));
}

bool CFString::starts_with(const CFString& other) const {
  return other.size() <= size() && std::equal(other.digits_.begin(), other.digits_.end(), digits_.begin());
}

bool CFString::ends_with(const CFString& other) const {
  return other.size() <= size() &&
         std::equal(other.digits_.rbegin(), other.digits_.rend(), digits_.rbegin());
}

CFString CFString::power(std::size_t k) const {
  CFString out;
  out.digits_.reserve(digits_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out += *this;
  return out;
}

CFString& CFString::operator+=(const CFString& other) {
  digits_.insert(digits_.end(), other.digits_.begin(), other.digits_.end());
  return *this;
}

std::string CFString::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits_[i]);
  }
  return out + ")";
}

void ConvergentPair::push(Digit a) {
  BigInt np = p * static_cast<long>(a) + p_prev;
  BigInt nq = q * static_cast<long>(a) + q_prev;
  p_prev = std::move(p);
  q_prev = std::move(q);
  p = std::move(np);
  q = std::move(nq);
  ++length;
}

ConvergentPair convergents(const CFString& s) {
  ConvergentPair m;
  for (Digit a : s.digits()) m.push(a);
  return m;
}

CFString canonical_expansion(const Rational& r) {
  if (r <= 0 || r > 1) throw std::domain_error("canonical expansion needs 0 < r <= 1");
  std::vector<Digit> digits;
  BigInt num = r.get_num();
  BigInt den = r.get_den();
  // r = num/den < 1, so the leading integer part is zero.
  while (num != 0) {
    BigInt a = den / num;
    BigInt rem = den % num;
    if (!a.fits_slong_p()) throw std::overflow_error("partial quotient exceeds 64 bits");
    digits.push_back(a.get_si());
    den = num;
    num = rem;
  }
  return CFString(std::move(digits));
}

RationalExpansions expansions_of_rational(const Rational& r) {
  if (r <= 0 || r >= 1) throw std::domain_error("expansions_of_rational needs 0 < r < 1");
  CFString canonical = canonical_expansion(r);
  // The other expansion replaces the tail a by a-1, 1 (last digit is >= 2 here).
  std::vector<Digit> other = canonical.digits();
  other.back() -= 1;
  other.push_back(1);
  CFString alt(std::move(other));
  if (canonical.even()) return {canonical, alt};
  return {alt, canonical};
}

Rational value_of(const CFString& s) {
  if (s.empty()) throw std::domain_error("value_of needs a non-empty string");
  ConvergentPair m = convergents(s);
  return make_rational(m.p, m.q);
}

BigInt q_of(const CFString& s) { return value_of(s).get_den(); }

namespace {

// Position-wise verdict of the alternating rule at the first differing
// index; nullopt when no index below min(|S|,|T|) differs.
std::optional<bool> alternating_compare(const CFString& s, const CFString& t) {
  std::size_t n = std::min(s.size(), t.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (s[k] == t[k]) continue;
    return (k % 2 == 0) ? s[k] > t[k] : s[k] < t[k];
  }
  return std::nullopt;
}

}  // namespace

bool lt_same_length(const CFString& s, const CFString& t) {
  if (s.size() != t.size()) throw std::domain_error("lt_same_length needs strings of equal length");
  if (s.empty()) throw std::domain_error("order predicates need non-empty strings");
  return alternating_compare(s, t).value_or(false);
}

bool ll(const CFString& s, const CFString& t) {
  if (s.empty() || t.empty()) throw std::domain_error("order predicates need non-empty strings");
  return alternating_compare(s, t).value_or(false);
}

BigInt matching_index(const CFString& s) {
  BigInt sum = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j % 2 == 0)
      sum += static_cast<long>(s[j]);
    else
      sum -= static_cast<long>(s[j]);
  }
  return sum;
}

BigInt matching_index(const Rational& r) { return matching_index(expansions_of_rational(r).even); }

double mobius_apply(const CFString& s, double x) {
  ConvergentPair m = convergents(s);
  return (m.p_prev.get_d() * x + m.p.get_d()) / (m.q_prev.get_d() * x + m.q.get_d());
}

double mobius_derivative(const CFString& s, double x) {
  ConvergentPair m = convergents(s);
  double den = m.q_prev.get_d() * x + m.q.get_d();
  double sign = (s.size() % 2 == 0) ? 1.0 : -1.0;
  return sign / (den * den);
}

}  // namespace alphacf
