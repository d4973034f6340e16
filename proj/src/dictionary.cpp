#include "alphacf/dictionary.hpp"

#include <set>
#include <stdexcept>

#include "alphacf/quadratic_intervals.hpp"
#include "alphacf/tuning.hpp"

namespace alphacf {

namespace {

char flip(char b) { return b == '0' ? '1' : '0'; }

std::string complement(std::string bits) {
  for (char& b : bits) b = flip(b);
  return bits;
}

void check_bits(const std::string& bits) {
  for (char b : bits)
    if (b != '0' && b != '1') throw std::domain_error("bit strings may only hold '0' and '1'");
}

// Appends the blocks of `digits`; block i is '1' when first_one ^ (i odd).
void append_blocks(std::string& out, const CFString& digits, bool first_one) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char b = ((i % 2 == 0) == first_one) ? '1' : '0';
    out.append(static_cast<std::size_t>(digits[i]), b);
  }
}

BinaryAngle phi_finite(const CFString& digits) {
  std::string pre = "0";
  append_blocks(pre, digits, true);
  // The next block would have the opposite parity and infinite length.
  char tail = digits.size() % 2 == 0 ? '1' : '0';
  return BinaryAngle(pre, std::string(1, tail));
}

}  // namespace

BinaryAngle::BinaryAngle(std::string preperiod, std::string period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  check_bits(preperiod_);
  check_bits(period_);
  if (period_.empty()) throw std::domain_error("a binary angle needs a non-empty period");
  const std::size_t n = period_.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool primitive_divisor = true;
    for (std::size_t i = d; i < n && primitive_divisor; ++i) primitive_divisor = period_[i] == period_[i - d];
    if (primitive_divisor) {
      period_.resize(d);
      break;
    }
  }
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    preperiod_.pop_back();
    period_ = period_.back() + period_.substr(0, period_.size() - 1);
  }
}

char BinaryAngle::bit(std::size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

std::string BinaryAngle::take(std::size_t n) const {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(bit(i));
  return out;
}

Rational BinaryAngle::value() const {
  BigInt pre = preperiod_.empty() ? BigInt(0) : BigInt(preperiod_, 2);
  BigInt per(period_, 2);
  BigInt cycle = (BigInt(1) << static_cast<mp_bitcnt_t>(period_.size())) - 1;
  BigInt scale = BigInt(1) << static_cast<mp_bitcnt_t>(preperiod_.size());
  Rational v(pre * cycle + per, cycle * scale);
  v.canonicalize();
  return v;
}

std::string BinaryAngle::to_string() const { return "0." + preperiod_ + "(" + period_ + ")"; }

BinaryAngle phi(const PeriodicCF& x) {
  std::string pre = "0";
  append_blocks(pre, x.preperiod(), true);
  const bool period_first_one = x.preperiod().size() % 2 == 0;
  std::string per;
  append_blocks(per, x.period(), period_first_one);
  // An odd period flips the block parity on every pass.
  if (x.period().size() % 2 == 1) append_blocks(per, x.period(), !period_first_one);
  return BinaryAngle(pre, per);
}

BinaryAngle phi(const Rational& x) {
  if (x < 0 || x > 1) throw std::domain_error("phi needs x in [0,1]");
  if (x == 0) return phi_finite(CFString{});
  return phi_finite(canonical_expansion(x));
}

BinaryAngle phi(const Surd& x) {
  if (x.is_rational()) return phi(x.to_rational());
  return phi(cf_of_surd(x));
}

std::string phi_prefix(const CFString& prefix) {
  std::string out = "0";
  append_blocks(out, prefix, true);
  return out;
}

std::pair<std::string, std::string> root_angles(const Rational& r) {
  if (!is_extremal(r)) throw std::domain_error("root_angles needs r in Q_E");
  CFString b = canonical_expansion(r);
  std::vector<Digit> digits = b.digits();
  std::string sigma0 = "0";
  // Last block one shorter; a final digit 1 leaves the block empty.
  digits.back() -= 1;
  for (std::size_t i = 0; i < digits.size(); ++i) sigma0.append(static_cast<std::size_t>(digits[i]), i % 2 == 0 ? '1' : '0');
  return {sigma0, complement(sigma0)};
}

std::string tau_w(const std::string& sigma0, const std::string& sigma1, const std::string& bits) {
  if (sigma0.size() != sigma1.size()) throw std::domain_error("tau_w needs |Sigma0| = |Sigma1|");
  check_bits(bits);
  std::string out;
  out.reserve(bits.size() * sigma0.size());
  for (char b : bits) out += b == '0' ? sigma0 : sigma1;
  return out;
}

BinaryAngle tau_w(const std::string& sigma0, const std::string& sigma1, const BinaryAngle& theta) {
  return BinaryAngle(tau_w(sigma0, sigma1, theta.preperiod()), tau_w(sigma0, sigma1, theta.period()));
}

bool is_real_ray(const BinaryAngle& theta, std::size_t k_max) {
  auto tent = [](const Rational& x) {
    Rational twice = 2 * x;
    Rational other = 2 - twice;
    return twice < other ? twice : other;
  };
  const Rational t1 = tent(theta.value());
  std::set<Rational> seen;
  Rational x = t1;
  for (std::size_t k = 1; k_max == 0 || k <= k_max; ++k) {
    x = tent(x);
    if (x > t1) return false;
    if (!seen.insert(x).second) break;
  }
  return true;
}

bool commutation_check(const Rational& r, const CFString& prefix, std::size_t bits) {
  auto [sigma0, sigma1] = root_angles(r);
  std::string lhs = tau_w(sigma0, sigma1, phi_prefix(prefix));
  std::string rhs = phi_prefix(tau_string(r, prefix));
  if (lhs.size() < bits || rhs.size() < bits) throw std::domain_error("commutation_check: prefix too short for the requested bits");
  return lhs.compare(0, bits, rhs, 0, bits) == 0;
}

bool commutation_check(const Rational& r, const Surd& x) {
  auto [sigma0, sigma1] = root_angles(r);
  return tau_w(sigma0, sigma1, phi(x)).value() == phi(tau_value(r, x)).value();
}

}  // namespace alphacf
