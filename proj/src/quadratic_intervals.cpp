#include "alphacf/quadratic_intervals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace alphacf {

namespace {

bool lies_between(const Surd& lo, const Surd& x, const Surd& hi) {
  return surd_compare(lo, x) == std::strong_ordering::less && surd_compare(x, hi) == std::strong_ordering::less;
}

// Distinct Gauss-map iterates x, G(x), G^2(x), ... For irrationals the list
// closes when the orbit cycles; for rationals it ends with 0.
std::vector<Surd> gauss_orbit(const Surd& x) {
  if (x.sign() < 0 || surd_compare(x, Surd(1)) == std::strong_ordering::greater)
    throw std::domain_error("Gauss orbit needs 0 <= x <= 1");
  std::vector<Surd> orbit;
  if (x.is_rational()) {
    Rational cur = x.to_rational();
    orbit.emplace_back(cur);
    while (cur != 0) {
      Rational inv = 1 / cur;
      BigInt whole;
      mpz_fdiv_q(whole.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
      cur = inv - whole;
      orbit.emplace_back(cur);
    }
    return orbit;
  }
  PeriodicCF cf = cf_of_surd(x);
  const std::size_t distinct = cf.preperiod().size() + cf.period().size();
  Surd cur = x;
  for (std::size_t k = 0; k < distinct; ++k) {
    orbit.push_back(cur);
    Surd inv = cur.reciprocal();
    cur = inv - Surd(surd_floor(inv));
  }
  return orbit;
}

}  // namespace

bool QuadraticInterval::contains(const Surd& x) const { return lies_between(alpha1, x, alpha0); }

QuadraticInterval build_interval(const Rational& r) {
  RationalExpansions exps = expansions_of_rational(r);
  QuadraticInterval out;
  out.r = r;
  out.s0 = exps.even;
  out.s1 = exps.odd;
  out.alpha0 = surd_from_periodic(PeriodicCF({}, out.s0));
  out.alpha1 = surd_from_periodic(PeriodicCF({}, out.s1));
  out.n = 0;
  out.m = 0;
  for (std::size_t i = 0; i < out.s0.size(); ++i) {
    // Position i + 1 in 1-based numbering.
    if (i % 2 == 0)
      out.m += static_cast<long>(out.s0[i]);
    else
      out.n += static_cast<long>(out.s0[i]);
  }
  out.index = out.m - out.n;
  return out;
}

bool satisfies_splitting_criterion(const CFString& s) {
  const std::size_t n = s.size();
  for (std::size_t k = 1; k < n; ++k) {
    CFString a = s.prefix(k);
    CFString b = s.suffix_from(k);
    if (a == b && a.odd()) continue;
    if (!lt_same_length(s, b + a)) return false;
  }
  return true;
}

bool is_extremal(const Rational& r) {
  if (r <= 0 || r >= 1) return false;
  return satisfies_splitting_criterion(expansions_of_rational(r).even);
}

std::vector<Rational> enumerate_qe_rationals(long max_denominator, Execution exec) {
  if (max_denominator < 2) throw std::domain_error("enumerate_qe needs max_denominator >= 2");
  // One stripe per denominator; stripes are merged in denominator order and
  // then sorted by value, so the output does not depend on scheduling.
  std::vector<std::vector<Rational>> stripes(static_cast<std::size_t>(max_denominator + 1));
  auto fill = [&stripes](long q) {
    auto& stripe = stripes[static_cast<std::size_t>(q)];
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rational r = make_rational(p, q);
      if (is_extremal(r)) stripe.push_back(std::move(r));
    }
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long q = 2; q <= max_denominator; ++q) fill(q);
  } else {
    for (long q = 2; q <= max_denominator; ++q) fill(q);
  }
  std::vector<Rational> out;
  for (auto& stripe : stripes) out.insert(out.end(), stripe.begin(), stripe.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuadraticInterval> enumerate_qe(long max_denominator, Execution exec) {
  std::vector<Rational> rs = enumerate_qe_rationals(max_denominator, exec);
  std::vector<QuadraticInterval> out(rs.size());
  const long count = static_cast<long>(rs.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = build_interval(rs[static_cast<std::size_t>(i)]);
  } else {
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = build_interval(rs[static_cast<std::size_t>(i)]);
  }
  return out;
}

Rational pseudocenter(const Surd& lo_in, const Surd& hi_in) {
  if (surd_compare(lo_in, hi_in) != std::strong_ordering::less)
    throw std::domain_error("pseudocenter needs a non-empty interval");
  // x = n_0 + 1/(n_1 + 1/(...)): peel integer parts until an integer fits
  // strictly inside; hi == nullopt stands for +infinity.
  std::vector<BigInt> parts;
  Surd lo = lo_in;
  std::optional<Surd> hi = hi_in;
  constexpr int kMaxDepth = 100000;
  for (int depth = 0; depth < kMaxDepth; ++depth) {
    BigInt n = surd_floor(lo);
    Surd next(BigInt(n + 1));
    if (!hi || surd_compare(next, *hi) == std::strong_ordering::less) {
      parts.push_back(n + 1);
      Rational value = Rational(parts.back());
      for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) value = Rational(*it) + 1 / value;
      value.canonicalize();
      return value;
    }
    parts.push_back(n);
    Surd frac_lo = lo - Surd(n);
    Surd frac_hi = *hi - Surd(n);
    Surd new_lo = frac_hi.reciprocal();
    if (frac_lo.is_zero()) {
      hi.reset();
    } else {
      hi = frac_lo.reciprocal();
    }
    lo = new_lo;
  }
  throw std::runtime_error("pseudocenter: depth limit exceeded");
}

bool in_b_t(const Surd& x, const Surd& t) {
  for (const Surd& y : gauss_orbit(x)) {
    if (surd_compare(y, t) == std::strong_ordering::less) return false;
  }
  return true;
}

bool in_bifurcation_set(const Surd& x) { return in_b_t(x, x); }

namespace {

bool interval_contains(const QuadraticInterval& iv, const Surd& alpha, const std::optional<PeriodicCF>& alpha_cf) {
  if (!alpha_cf) return iv.contains(alpha);
  // Irrational alpha: compare continued fractions, valid across fields.
  return compare_cf(iv.alpha1_cf(), *alpha_cf) == std::strong_ordering::less &&
         compare_cf(*alpha_cf, iv.alpha0_cf()) == std::strong_ordering::less;
}

}  // namespace

IntervalSearch maximal_interval_containing(const Surd& alpha) {
  if (alpha.sign() <= 0 || surd_compare(alpha, golden_mean()) != std::strong_ordering::less)
    throw std::domain_error("maximal_interval_containing needs 0 < alpha < g");
  std::optional<PeriodicCF> alpha_cf;
  if (!alpha.is_rational()) {
    if (in_bifurcation_set(alpha)) return NotFound{};
    alpha_cf = cf_of_surd(alpha);
  }
  constexpr long kBound = 1'000'000;
  BigInt lp = 0, lq = 1, rp = 1, rq = 1;
  while (true) {
    BigInt mp = lp + rp;
    BigInt mq = lq + rq;
    if (mq > kBound) return Undecided{BigInt(kBound)};
    Rational mediant = make_rational(mp, mq);
    if (is_extremal(mediant)) {
      QuadraticInterval iv = build_interval(mediant);
      if (interval_contains(iv, alpha, alpha_cf)) return iv;
    }
    std::strong_ordering side = surd_compare(alpha, Surd(mediant));
    if (side == std::strong_ordering::equal)
      throw std::logic_error("rational parameter not covered by a maximal interval on its Stern-Brocot path");
    if (side == std::strong_ordering::less) {
      rp = mp;
      rq = mq;
    } else {
      lp = mp;
      lq = mq;
    }
  }
}

IntervalSearch maximal_interval_containing(double alpha, long max_denominator) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  if (!(alpha > 0.0 && alpha < g)) throw std::domain_error("maximal_interval_containing needs 0 < alpha < g");
  long lp = 0, lq = 1, rp = 1, rq = 1;
  while (lq + rq <= max_denominator) {
    long mp = lp + rp;
    long mq = lq + rq;
    Rational mediant = make_rational(mp, mq);
    if (is_extremal(mediant)) {
      QuadraticInterval iv = build_interval(mediant);
      if (iv.alpha1.to_double() < alpha && alpha < iv.alpha0.to_double()) return iv;
    }
    double m = static_cast<double>(mp) / static_cast<double>(mq);
    if (alpha < m) {
      rp = mp;
      rq = mq;
    } else {
      lp = mp;
      lq = mq;
    }
  }
  return Undecided{BigInt(max_denominator)};
}

}  // namespace alphacf
