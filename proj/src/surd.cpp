#include "alphacf/surd.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace alphacf {

namespace {

bool is_perfect_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

BigInt isqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

struct RadicandSplit {
  BigInt square_root_part{1};  // k with d = k^2 * kernel
  BigInt kernel{1};
};

// d = k^2 * m. Prime factors p with p^3 <= (remaining cofactor) are removed
// by trial division (p < 10^5); the rough remainder then has at most two
// prime factors and is a square iff it is a perfect square.
RadicandSplit split_radicand(BigInt d) {
  RadicandSplit out;
  constexpr unsigned long kTrialLimit = 100000;
  BigInt kernel = 1;
  auto strip = [&](unsigned long p) {
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
      mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
      ++exponent;
    }
    for (unsigned i = 0; i + 1 < exponent; i += 2) out.square_root_part *= p;
    if (exponent % 2) kernel *= p;
  };
  strip(2);
  for (unsigned long p = 3; p <= kTrialLimit; p += 2) {
    BigInt cube = BigInt(p) * p * p;
    if (cube > d) break;
    strip(p);
  }
  if (d > 1 && is_perfect_square(d)) {
    out.square_root_part *= isqrt(d);
  } else {
    kernel *= d;
  }
  out.kernel = kernel;
  return out;
}

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

}  // namespace

Surd::Surd(const Rational& r) : a_(r.get_num()), c_(r.get_den()) {}

Surd::Surd(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (c_ == 0) throw std::domain_error("surd with zero denominator");
  if (b_ != 0 && d_ == 0) b_ = 0;
  if (b_ != 0) {
    if (d_ < 0) throw std::domain_error("negative radicand");
    RadicandSplit split = split_radicand(d_);
    b_ *= split.square_root_part;
    d_ = split.kernel;
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
  }
  normalize();
}

Surd Surd::sqrt(const BigInt& d) { return Surd(0, 1, 1, d); }

void Surd::normalize() {
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  if (b_ == 0) d_ = 0;
  BigInt g = gcd3(a_, b_, c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

Rational Surd::to_rational() const {
  if (!is_rational()) throw std::domain_error("surd is irrational");
  return make_rational(a_, c_);
}

int Surd::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 d; equality would make sqrt(d) rational.
  BigInt lhs = a_ * a_;
  BigInt rhs = b_ * b_ * d_;
  return lhs > rhs ? sa : sb;
}

long double Surd::to_long_double() const {
  if (b_ == 0) return static_cast<long double>(mpq_get_d(to_rational().get_mpq_t()));
  std::size_t bits = 128 + 2 * std::max(mpz_sizeinbase(a_.get_mpz_t(), 2), mpz_sizeinbase(b_.get_mpz_t(), 2)) +
                     mpz_sizeinbase(d_.get_mpz_t(), 2);
  mpf_class root(d_, bits);
  root = ::sqrt(root);
  mpf_class num(a_, bits);
  num += mpf_class(b_, bits) * root;
  num /= mpf_class(c_, bits);
  return static_cast<long double>(num.get_d());
}

Surd Surd::operator-() const {
  Surd out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

Surd Surd::rebased(const Surd& o) const {
  if (o.b_ == 0 || b_ == 0 || o.d_ == d_) return o;
  BigInt product = d_ * o.d_;
  if (!is_perfect_square(product)) throw std::domain_error("surds from different quadratic fields");
  // sqrt(d2) = k sqrt(d1) / d1 with k^2 = d1 d2.
  Surd out;
  out.a_ = o.a_ * d_;
  out.b_ = o.b_ * isqrt(product);
  out.c_ = o.c_ * d_;
  out.d_ = d_;
  out.normalize();
  return out;
}

Surd& Surd::operator+=(const Surd& other) {
  Surd o = rebased(other);
  if (b_ == 0) d_ = o.d_;
  a_ = a_ * o.c_ + o.a_ * c_;
  b_ = b_ * o.c_ + o.b_ * c_;
  c_ = c_ * o.c_;
  normalize();
  return *this;
}

Surd& Surd::operator-=(const Surd& other) { return *this += -other; }

Surd& Surd::operator*=(const Surd& other) {
  Surd o = rebased(other);
  if (b_ == 0) d_ = o.d_;
  BigInt na = a_ * o.a_ + b_ * o.b_ * d_;
  BigInt nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  c_ = c_ * o.c_;
  normalize();
  return *this;
}

Surd& Surd::operator/=(const Surd& other) { return *this *= other.reciprocal(); }

Surd Surd::reciprocal() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Surd out;
  BigInt norm = a_ * a_ - b_ * b_ * d_;
  out.a_ = c_ * a_;
  out.b_ = -c_ * b_;
  out.c_ = norm;
  out.d_ = d_;
  out.normalize();
  return out;
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) { return surd_compare(x, y); }

bool operator==(const Surd& x, const Surd& y) { return surd_compare(x, y) == std::strong_ordering::equal; }

std::string Surd::to_string() const {
  if (b_ == 0) return alphacf::to_string(to_rational());
  std::string num = "(" + a_.get_str() + (b_ < 0 ? "-" : "+") + BigInt(::abs(b_)).get_str() + "*sqrt(" +
                    d_.get_str() + "))";
  if (c_ == 1) return num;
  return num + "/" + c_.get_str();
}

PeriodicCF::PeriodicCF(CFString preperiod, CFString period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw std::domain_error("period must be non-empty");
  // Primitive root of the period.
  const std::size_t n = period_.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len) continue;
    bool repeats = true;
    for (std::size_t i = len; i < n && repeats; ++i) repeats = period_[i] == period_[i - len];
    if (repeats) {
      period_ = period_.prefix(len);
      break;
    }
  }
  // Minimal preperiod: absorb trailing preperiod digits into a rotated period.
  std::vector<Digit> pre = preperiod_.digits();
  std::vector<Digit> per = period_.digits();
  while (!pre.empty() && pre.back() == per.back()) {
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
    pre.pop_back();
  }
  preperiod_ = CFString(std::move(pre));
  period_ = CFString(std::move(per));
}

Digit PeriodicCF::digit(std::size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

CFString PeriodicCF::take(std::size_t n) const {
  std::vector<Digit> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = digit(i);
  return CFString(std::move(out));
}

std::string PeriodicCF::to_string() const {
  std::string out = "[0;";
  for (Digit d : preperiod_.digits()) out += std::to_string(d) + ",";
  out += "(";
  for (std::size_t i = 0; i < period_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(period_[i]);
  }
  return out + ")]";
}

Surd surd_from_periodic(const PeriodicCF& cf) {
  // y = [0; period-bar] solves q_prev y^2 + (q - p_prev) y - p = 0.
  ConvergentPair m = convergents(cf.period());
  BigInt linear = m.q - m.p_prev;
  BigInt disc = linear * linear + 4 * m.p * m.q_prev;
  Surd y(-linear, 1, 2 * m.q_prev, disc);
  if (cf.preperiod().empty()) return y;
  return mobius_apply(cf.preperiod(), y);
}

PeriodicCF cf_of_surd(const Surd& x) {
  if (x.is_rational()) throw std::domain_error("cf_of_surd needs an irrational value");
  if (x.sign() <= 0 || surd_compare(x, Surd(1)) != std::strong_ordering::less)
    throw std::domain_error("cf_of_surd needs 0 < x < 1");
  using State = std::array<BigInt, 3>;
  std::map<State, std::size_t> seen;
  std::vector<Digit> digits;
  Surd cur = x;
  constexpr std::size_t kMaxSteps = 1'000'000;
  for (std::size_t k = 0; k < kMaxSteps; ++k) {
    auto [it, inserted] = seen.emplace(State{cur.a(), cur.b(), cur.c()}, k);
    if (!inserted) {
      std::size_t j = it->second;
      return PeriodicCF(CFString(std::vector<Digit>(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(j))),
                        CFString(std::vector<Digit>(digits.begin() + static_cast<std::ptrdiff_t>(j), digits.end())));
    }
    Surd inv = cur.reciprocal();
    BigInt a = surd_floor(inv);
    if (!a.fits_slong_p()) throw std::overflow_error("partial quotient exceeds 64 bits");
    digits.push_back(a.get_si());
    cur = inv - Surd(a);
  }
  throw std::runtime_error("cf_of_surd: period not found within step limit");
}

std::strong_ordering compare_cf(const PeriodicCF& x, const PeriodicCF& y) {
  if (x == y) return std::strong_ordering::equal;
  std::size_t horizon = std::max(x.preperiod().size(), y.preperiod().size()) +
                        std::lcm(x.period().size(), y.period().size());
  for (std::size_t i = 0; i < horizon; ++i) {
    Digit dx = x.digit(i);
    Digit dy = y.digit(i);
    if (dx == dy) continue;
    bool x_less = (i % 2 == 0) ? dx > dy : dx < dy;
    return x_less ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

bool same_field(const Surd& x, const Surd& y) {
  if (x.is_rational() || y.is_rational() || x.d() == y.d()) return true;
  return is_perfect_square(x.d() * y.d());
}

}  // namespace

std::strong_ordering surd_compare(const Surd& x, const Surd& y) {
  if (same_field(x, y)) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  // Different fields, both irrational: integer parts, then continued fractions.
  BigInt fx = surd_floor(x);
  BigInt fy = surd_floor(y);
  if (fx != fy) return fx < fy ? std::strong_ordering::less : std::strong_ordering::greater;
  return compare_cf(cf_of_surd(x - Surd(fx)), cf_of_surd(y - Surd(fy)));
}

BigInt surd_floor(const Surd& x) {
  BigInt out;
  if (x.is_rational()) {
    mpz_fdiv_q(out.get_mpz_t(), x.a().get_mpz_t(), x.c().get_mpz_t());
    return out;
  }
  // b sqrt(d) lies strictly between consecutive integers n and n + 1.
  BigInt s = isqrt(x.b() * x.b() * x.d());
  BigInt n = x.b() > 0 ? BigInt(x.a() + s) : BigInt(x.a() - s - 1);
  mpz_fdiv_q(out.get_mpz_t(), n.get_mpz_t(), x.c().get_mpz_t());
  return out;
}

Surd surd_recip_shift(const Surd& x, const BigInt& c) { return x.abs().reciprocal() - Surd(c); }

Surd golden_mean() { return Surd(-1, 1, 2, 5); }

Surd golden_mean_squared() { return Surd(3, -1, 2, 5); }

namespace {

std::vector<Digit> parse_digit_list(const std::string& body, const std::string& text) {
  std::vector<Digit> out;
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string token = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw std::invalid_argument("bad continued fraction literal: '" + text + "'");
    out.push_back(std::stoll(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Surd parse_exact(const std::string& raw) {
  std::string text;
  std::copy_if(raw.begin(), raw.end(), std::back_inserter(text), [](unsigned char ch) { return !std::isspace(ch); });
  if (text.empty()) throw std::invalid_argument("empty exact literal");
  if (text.front() != '[') return Surd(parse_rational(text));
  if (text == "[0]") return Surd(0);
  if (text.size() < 4 || text.rfind("[0;", 0) != 0 || text.back() != ']')
    throw std::invalid_argument("bad continued fraction literal: '" + raw + "'");
  std::string body = text.substr(3, text.size() - 4);
  std::size_t open = body.find('(');
  if (open == std::string::npos) {
    std::vector<Digit> digits = parse_digit_list(body, raw);
    if (digits.empty()) throw std::invalid_argument("bad continued fraction literal: '" + raw + "'");
    return Surd(value_of(CFString(std::move(digits))));
  }
  if (body.back() != ')' || body.find('(', open + 1) != std::string::npos)
    throw std::invalid_argument("period must be the final parenthesized group: '" + raw + "'");
  std::string pre = body.substr(0, open);
  if (!pre.empty()) {
    if (pre.back() != ',') throw std::invalid_argument("bad continued fraction literal: '" + raw + "'");
    pre.pop_back();
  }
  std::vector<Digit> period = parse_digit_list(body.substr(open + 1, body.size() - open - 2), raw);
  if (period.empty()) throw std::invalid_argument("empty period in '" + raw + "'");
  return surd_from_periodic(PeriodicCF(CFString(parse_digit_list(pre, raw)), CFString(std::move(period))));
}

std::string format_exact(const Surd& x) {
  if (x.is_zero()) return "[0]";
  bool in_unit = x.sign() > 0 && surd_compare(x, Surd(1)) != std::strong_ordering::greater;
  if (!in_unit) return x.to_string();
  if (x.is_rational()) {
    CFString digits = canonical_expansion(x.to_rational());
    std::string out = "[0;";
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(digits[i]);
    }
    return out + "]";
  }
  return cf_of_surd(x).to_string();
}

}  // namespace alphacf
