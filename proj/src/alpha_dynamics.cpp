#include "alphacf/alpha_dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "alphacf/quadratic_intervals.hpp"

namespace alphacf {

namespace {

BigInt floor_of(const Rational& x) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

long to_digit(const BigInt& c) {
  if (!c.fits_slong_p()) throw std::overflow_error("T_alpha digit does not fit in a long");
  return c.get_si();
}

}  // namespace

OrbitPoint<Rational> t_alpha_step(const Rational& alpha, const Rational& x) {
  if (x < alpha - 1 || x > alpha) throw std::domain_error("t_alpha_step needs x in [alpha-1, alpha]");
  if (x == 0) return {Rational(0), 1, 0};
  Rational inv = 1 / abs(x);
  BigInt c = floor_of(inv + 1 - alpha);
  Rational y = inv - c;
  y.canonicalize();
  return {y, 1, to_digit(c)};
}

OrbitPoint<Surd> t_alpha_step(const Surd& alpha, const Surd& x) {
  if (surd_compare(x, alpha - Surd(1)) == std::strong_ordering::less ||
      surd_compare(x, alpha) == std::strong_ordering::greater)
    throw std::domain_error("t_alpha_step needs x in [alpha-1, alpha]");
  if (x.is_zero()) return {Surd(0), 1, 0};
  Surd inv = x.abs().reciprocal();
  // Mixed fields throw from the surd arithmetic below.
  BigInt c = surd_floor(inv + Surd(1) - alpha);
  return {inv - Surd(c), 1, to_digit(c)};
}

OrbitPoint<double> t_alpha_step(double alpha, double x) {
  if (x == 0.0) return {0.0, 1, 0};
  double inv = 1.0 / std::fabs(x);
  double c = std::floor(inv + 1.0 - alpha);
  return {inv - c, 1, static_cast<long>(c)};
}

std::vector<OrbitPoint<Rational>> t_alpha_orbit(const Rational& alpha, const Rational& x, std::size_t n) {
  std::vector<OrbitPoint<Rational>> orbit;
  orbit.reserve(n + 1);
  orbit.push_back({x, 0, 0});
  for (std::size_t k = 1; k <= n; ++k) {
    OrbitPoint<Rational> next = t_alpha_step(alpha, orbit.back().value);
    next.step = k;
    orbit.push_back(std::move(next));
  }
  return orbit;
}

std::pair<BigInt, BigInt> nm_exponents(const Rational& r) {
  QuadraticInterval iv = build_interval(r);
  return {iv.n, iv.m};
}

MatchResult verify_matching(const Rational& r, const Rational& alpha) {
  QuadraticInterval iv = build_interval(r);
  if (!iv.contains(Surd(alpha))) throw std::domain_error("verify_matching needs alpha in I_r");
  MatchResult out;
  out.steps_plus = static_cast<std::size_t>(iv.n.get_ui()) + 1;
  out.steps_minus = static_cast<std::size_t>(iv.m.get_ui()) + 1;

  auto run = [&alpha](Rational x, std::size_t steps, bool& hit_zero) {
    for (std::size_t k = 1; k <= steps; ++k) {
      if (x == 0) {
        hit_zero = true;
        return x;
      }
      x = t_alpha_step(alpha, x).value;
      if (x == 0 && k < steps) hit_zero = true;
    }
    return x;
  };
  bool zero = false;
  out.value_plus = run(alpha, out.steps_plus, zero);
  out.value_minus = run(alpha - 1, out.steps_minus, zero);
  if (zero)
    out.status = MatchStatus::orbit_hit_zero;
  else
    out.status = out.value_plus == out.value_minus ? MatchStatus::verified : MatchStatus::mismatch;
  return out;
}

namespace {

// [0; (period)] from below 10^-60 error: repeat the period until q > 10^30.
Rational periodic_approximation(const CFString& period) {
  static const BigInt kTarget = BigInt("1000000000000000000000000000000");
  CFString s = period;
  while (q_of(s) < kTarget) s += period;
  return value_of(s);
}

}  // namespace

Rational interval_point(const Rational& r, const Rational& fraction) {
  if (fraction <= 0 || fraction >= 1) throw std::domain_error("interval_point needs a fraction in (0,1)");
  RationalExpansions e = expansions_of_rational(r);
  Rational lo = periodic_approximation(e.odd);
  Rational hi = periodic_approximation(e.even);
  Rational x = lo + fraction * (hi - lo);
  x.canonicalize();
  if (!build_interval(r).contains(Surd(x))) throw std::logic_error("sample point fell outside I_r");
  return x;
}

MatchingReport check_matching(long max_denominator, Execution exec) {
  const std::vector<QuadraticInterval> ivs = enumerate_qe(max_denominator, exec);
  const std::vector<Rational> quartiles{Rational(1, 4), Rational(1, 2), Rational(3, 4)};

  struct Slot {
    long verified{0}, mismatches{0}, hit_zero{0}, resolved{0};
    std::vector<std::string> failures;
  };
  std::vector<Slot> slots(ivs.size());
  auto task = [&](std::size_t i) {
    Slot& slot = slots[i];
    const Rational& r = ivs[i].r;
    for (const Rational& f : quartiles) {
      MatchResult m = verify_matching(r, interval_point(r, f));
      if (m.status == MatchStatus::orbit_hit_zero) {
        ++slot.hit_zero;
        // Nudge the point by growing multiples of 1/1000 of the width.
        for (long k = 1; k <= 20 && m.status == MatchStatus::orbit_hit_zero; ++k) {
          Rational shifted = f + Rational(k % 2 == 1 ? k : -k, 1000);
          shifted.canonicalize();
          m = verify_matching(r, interval_point(r, shifted));
        }
        if (m.status == MatchStatus::verified) ++slot.resolved;
      }
      if (m.status == MatchStatus::verified) {
        ++slot.verified;
      } else {
        if (m.status == MatchStatus::mismatch) ++slot.mismatches;
        slot.failures.push_back(to_string(r) + " at fraction " + to_string(f));
      }
    }
  };
  const long count = static_cast<long>(ivs.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) task(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < count; ++i) task(static_cast<std::size_t>(i));
  }

  MatchingReport out;
  out.intervals = count;
  out.points = count * static_cast<long>(quartiles.size());
  for (Slot& s : slots) {
    out.verified += s.verified;
    out.mismatches += s.mismatches;
    out.hit_zero += s.hit_zero;
    out.hit_zero_resolved += s.resolved;
    out.failures.insert(out.failures.end(), s.failures.begin(), s.failures.end());
  }
  return out;
}

double closed_form_entropy(double alpha) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  const double pi2_6 = M_PI * M_PI / 6.0;
  if (alpha > g && alpha <= 1.0) return pi2_6 / std::log1p(alpha);
  if (alpha >= 0.5 && alpha <= g) return pi2_6 / std::log1p(g);
  return std::nan("");
}

}  // namespace alphacf
