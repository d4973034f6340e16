// Acceptance suite: one PASS/FAIL line per criterion. Optional arguments
// select criteria by number, e.g. `acceptance 3 5`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "alphacf/alpha_dynamics.hpp"
#include "alphacf/classification.hpp"
#include "alphacf/dictionary.hpp"
#include "alphacf/quadratic_intervals.hpp"
#include "alphacf/tuning.hpp"
#include "oracles.hpp"

using namespace alphacf;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int sign_of(const BigInt& x) { return sgn(x); }

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  double my = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

std::vector<Rational> rationals_up_to(long max_q) {
  std::vector<Rational> out;
  for (long q = 2; q <= max_q; ++q)
    for (long p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) out.push_back(make_rational(p, q));
  return out;
}

Outcome closed_form() {
  const std::vector<double> alphas{0.55, 0.65, 0.7, 0.8, 0.9, 1.0};
  EntropyConfig config{10'000'000, 1000, 8, Execution::parallel};
  auto start = std::chrono::steady_clock::now();
  std::vector<EntropyEstimate> est = entropy_at(alphas, 20240601, config);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = secs <= 60.0;
  std::ostringstream d;
  d << std::fixed << std::setprecision(5);
  for (const EntropyEstimate& e : est) {
    double err = std::fabs(e.value - closed_form_entropy(e.alpha));
    double tol = std::max(3 * e.std_error, 5e-3);
    ok = ok && err <= tol;
    d << " a=" << e.alpha << ":|dh|=" << err << (err <= tol ? "" : "!");
  }
  d << std::setprecision(1) << " in " << secs << " s";
  return {ok, d.str()};
}

Outcome plateau() {
  EntropyConfig config{2'000'000, 1000, 8, Execution::parallel};
  std::vector<EntropyEstimate> rows = entropy_scan(0.39, 0.61, 7, 11, config);
  auto [lo, hi] = std::minmax_element(rows.begin(), rows.end(),
                                      [](const auto& a, const auto& b) { return a.value < b.value; });
  double spread = hi->value - lo->value;
  MonotonicityClass c = classify_parameter(parse_exact("[0;(2)]"));
  const auto* lc = std::get_if<LocallyConstant>(&c);
  bool window_ok = lc && lc->window.r == make_rational(1, 2);
  std::ostringstream d;
  d << "spread=" << std::setprecision(3) << spread << " classify([0;(2)])=" << class_tag(c)
    << (lc ? "(W_" + to_string(lc->window.r) + ")" : "");
  return {spread <= 1e-2 && window_ok, d.str()};
}

Outcome matching() {
  MatchingReport rep = check_matching(40);
  std::ostringstream d;
  d << rep.intervals << " intervals, " << rep.verified << "/" << rep.points << " verified, " << rep.mismatches
    << " mismatches, " << rep.hit_zero_resolved << "/" << rep.hit_zero << " zero hits resolved";
  return {rep.ok() && rep.intervals >= 100, d.str()};
}

Outcome multiplicativity() {
  long checked = 0, failures = 0;
  for (const Rational& r : enumerate_qe_rationals(10))
    for (const Rational& p : rationals_up_to(20)) {
      // Oracle: alternating sum of the even-length expansion, computed apart
      // from the library's index routine.
      CFString tp = tau_string(r, canonical_expansion(p));
      oracle::Digits digits(tp.digits().begin(), tp.digits().end());
      if (digits.size() % 2 == 1) {
        digits.back() -= 1;
        digits.push_back(1);
      }
      long lhs = oracle::alternating_sum(digits);
      BigInt rhs = -matching_index(r) * matching_index(p);
      ++checked;
      if (BigInt(lhs) != rhs) ++failures;
    }
  return {failures == 0, std::to_string(checked) + " pairs, " + std::to_string(failures) + " failures"};
}

Outcome extremality() {
  oracle::ExtremalityOracle maximal;
  long checked = 0, disagreements = 0;
  for (const Rational& x : rationals_up_to(60)) {
    ++checked;
    if (is_extremal(x) != maximal(x.get_num().get_si(), x.get_den().get_si())) ++disagreements;
  }
  return {disagreements == 0, std::to_string(checked) + " rationals, " + std::to_string(disagreements) + " disagreements"};
}

Outcome mirroring() {
  const Rational third = make_rational(1, 3);
  long checked = 0, failures = 0;
  for (const Rational& p : rationals_up_to(20)) {
    Rational tp = tau_value(third, p);
    ++checked;
    if (sign_of(matching_index(tp)) != -sign_of(matching_index(p))) ++failures;
  }

  // Numerical corroboration: least-squares slope of h across I_p and
  // I_tau(p). Tuned intervals are narrow (down to 3e-5 for 41/138), so they
  // get long runs sampled at the two ends, where the slope is best resolved.
  struct Plan {
    Rational r;
    std::vector<Rational> fractions;
    std::uint64_t iterations;
  };
  const std::vector<Rational> spread{make_rational(1, 10), make_rational(3, 10), make_rational(1, 2),
                                     make_rational(7, 10), make_rational(9, 10)};
  const std::vector<Rational> ends{make_rational(1, 50), make_rational(49, 50)};
  auto slope_over = [&](const Plan& plan, std::uint64_t seed) {
    std::vector<double> x;
    for (const Rational& f : plan.fractions) x.push_back(interval_point(plan.r, f).get_d());
    std::vector<EntropyEstimate> est = entropy_at(x, seed, EntropyConfig{plan.iterations, 1000, 8, Execution::parallel});
    std::vector<double> y;
    for (const EntropyEstimate& e : est) y.push_back(e.value);
    return ols_slope(x, y);
  };
  const std::vector<std::pair<long, long>> samples{{1, 3}, {2, 3}, {1, 4}};
  const std::vector<std::uint64_t> tuned_iterations{20'000'000, 20'000'000, 125'000'000};

  bool slopes_ok = true;
  std::ostringstream d;
  d << checked << " p, " << failures << " sign failures; slopes";
  for (std::size_t k = 0; k < samples.size(); ++k) {
    Rational p = make_rational(samples[k].first, samples[k].second);
    Rational tp = tau_value(third, p);
    double outer = slope_over({p, spread, 4'000'000}, 300 + k);
    double inner = slope_over({tp, ends, tuned_iterations[k]}, 400 + k);
    bool opposite = outer * inner < 0;
    slopes_ok = slopes_ok && opposite;
    d << " " << to_string(p) << "->" << to_string(tp) << ":" << std::showpos << std::setprecision(3) << outer << "/"
      << inner << std::noshowpos << (opposite ? "" : "!");
  }
  return {failures == 0 && slopes_ok, d.str()};
}

Outcome witnesses() {
  long bad = 0;
  for (long n = 3; n <= 12; ++n) {
    WitnessFamilies w = witness_families(n);
    auto index = [](const QuadraticInterval& iv) {
      return oracle::alternating_sum(oracle::even_expansion(iv.r.get_num().get_si(), iv.r.get_den().get_si()));
    };
    bool ok = index(w.s) > 0 && index(w.t) == 0 && index(w.u) < 0 && is_extremal(w.s.r) && is_extremal(w.t.r) &&
              is_extremal(w.u.r);
    if (!ok) ++bad;
  }
  return {bad == 0, "n=3..12, " + std::to_string(bad) + " failures"};
}

Outcome dimension() {
  CFString z0{1, 1}, z1{2};
  DimensionBounds d = dimension_bounds({z0 + z0, z0 + z1, z1 + z0, z1 + z1});
  double target = std::log(2.0) / std::log(5.0);
  std::ostringstream s;
  s << std::setprecision(15) << "upper=" << d.upper << " target=" << target << " lower=" << d.lower;
  return {std::fabs(d.upper - target) <= 1e-12 && d.upper < 0.5, s.str()};
}

Outcome dictionary() {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<Digit> digit(1, 9);
  long commuted = 0, total = 0;
  for (const Rational& r : enumerate_qe_rationals(10))
    for (int k = 0; k < 20; ++k) {
      std::vector<Digit> d(40);
      for (Digit& x : d) x = digit(rng);
      ++total;
      commuted += commutation_check(r, CFString(std::move(d)), 40);
    }

  // Exact members of the bifurcation set: purely periodic [0;(S)] with S
  // the minimal rotation, so every Gauss iterate is >= x.
  std::set<std::string> seen;
  long members = 0, real = 0;
  std::uniform_int_distribution<Digit> small(1, 4);
  std::uniform_int_distribution<int> length(1, 5);
  while (members < 100) {
    std::vector<Digit> s(static_cast<std::size_t>(length(rng)));
    for (Digit& x : s) x = small(rng);
    Surd best = surd_from_periodic(PeriodicCF({}, CFString(s)));
    for (std::size_t k = 1; k < s.size(); ++k) {
      std::rotate(s.begin(), s.begin() + 1, s.end());
      Surd v = surd_from_periodic(PeriodicCF({}, CFString(s)));
      if (v < best) best = v;
    }
    if (!seen.insert(format_exact(best)).second || !in_bifurcation_set(best)) continue;
    ++members;
    real += is_real_ray(phi(best));
  }
  std::ostringstream d;
  d << "commutation " << commuted << "/" << total << ", real rays " << real << "/" << members;
  return {commuted == total && real == members, d.str()};
}

Outcome golden() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream d;
  auto expect = [&](const std::string& literal, const std::string& tag, const std::function<bool(const MonotonicityClass&)>& extra) {
    MonotonicityClass c = classify_parameter(parse_exact(literal));
    bool good = class_tag(c) == tag && extra(c);
    ok = ok && good;
    d << literal << "->" << class_tag(c) << (good ? " " : "! ");
  };
  auto any = [](const MonotonicityClass&) { return true; };
  expect("[0;(1)]", "PhaseTransition", any);
  expect("[0;(2)]", "LocallyConstant", any);
  expect("[0;2]", "MonotoneConstantOnInterval", [](const MonotonicityClass& c) {
    return std::get<MonotoneConstantOnInterval>(c).interval.r == make_rational(1, 2);
  });
  expect("[0;(2,1)]", "Mixed", any);
  expect("[0;2,(1)]", "Mixed", any);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  d << std::setprecision(3) << "in " << secs << " s";
  return {ok && secs <= 1.0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closed-form-entropy", closed_form},     {"plateau", plateau},           {"exact-matching", matching},
      {"multiplicativity", multiplicativity}, {"extremality-oracle", extremality}, {"index-mirroring", mirroring},
      {"witness-families", witnesses}, {"dimension-bound", dimension}, {"dictionary", dictionary},
      {"golden-set", golden}};
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " AC" << id << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
