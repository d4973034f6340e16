#include "alphacf/tuning.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>

#include "alphacf/quadratic_intervals.hpp"

namespace alphacf {

namespace {

void require_extremal(const Rational& r, const char* what) {
  if (!is_extremal(r)) throw std::domain_error(std::string(what) + ": " + to_string(r) + " is not in Q_E");
}

CFString substitute(const RationalExpansions& e, const CFString& a_string) {
  std::vector<Digit> out;
  for (Digit a : a_string.digits()) {
    out.insert(out.end(), e.odd.digits().begin(), e.odd.digits().end());
    for (Digit k = 1; k < a; ++k) out.insert(out.end(), e.even.digits().begin(), e.even.digits().end());
  }
  return CFString(std::move(out));
}

bool matches_at(const std::vector<Digit>& s, std::size_t pos, const CFString& block) {
  if (pos + block.size() > s.size()) return false;
  return std::equal(block.digits().begin(), block.digits().end(), s.begin() + static_cast<std::ptrdiff_t>(pos));
}

}  // namespace

bool TuningWindow::contains(const Surd& x) const {
  return surd_compare(omega, x) != std::strong_ordering::greater && surd_compare(x, alpha0) == std::strong_ordering::less;
}

CFString tau_string(const Rational& r, const CFString& a_string) {
  if (!is_extremal(r)) std::clog << "warning: tau_string with r = " << to_string(r) << " outside Q_E\n";
  return substitute(expansions_of_rational(r), a_string);
}

Surd tau_value(const Rational& r, const Surd& x) {
  if (x.sign() < 0 || surd_compare(x, Surd(1)) == std::strong_ordering::greater)
    throw std::domain_error("tau_value needs x in [0,1]");
  RationalExpansions e = expansions_of_rational(r);
  if (x.is_zero()) return surd_from_periodic(PeriodicCF(e.odd, e.even));
  if (x.is_rational()) return Surd(value_of(substitute(e, canonical_expansion(x.to_rational()))));
  PeriodicCF cf = cf_of_surd(x);
  return surd_from_periodic(PeriodicCF(substitute(e, cf.preperiod()), substitute(e, cf.period())));
}

Rational tau_value(const Rational& r, const Rational& x) {
  if (x <= 0 || x > 1) throw std::domain_error("tau_value on rationals needs x in (0,1]");
  return value_of(substitute(expansions_of_rational(r), canonical_expansion(x)));
}

TuningWindow tuning_window(const Rational& r) {
  require_extremal(r, "tuning_window");
  RationalExpansions e = expansions_of_rational(r);
  TuningWindow w;
  w.r = r;
  w.omega = surd_from_periodic(PeriodicCF(e.odd, e.even));
  w.alpha0 = surd_from_periodic(PeriodicCF({}, e.even));
  w.neutral = matching_index(e.even) == 0;
  return w;
}

std::optional<CFString> tau_inverse_string(const Rational& r, const CFString& a_string) {
  RationalExpansions e = expansions_of_rational(r);
  const std::vector<Digit>& s = a_string.digits();
  std::vector<Digit> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (!matches_at(s, pos, e.odd)) return std::nullopt;
    pos += e.odd.size();
    Digit k = 0;
    // S0 and S1 disagree at a fixed position, so at most one of them matches.
    while (pos < s.size() && !matches_at(s, pos, e.odd)) {
      if (!matches_at(s, pos, e.even)) return std::nullopt;
      pos += e.even.size();
      ++k;
    }
    out.push_back(k + 1);
  }
  if (out.empty()) return std::nullopt;
  return CFString(std::move(out));
}

NestingResult window_nesting(const Rational& r, const Rational& s) {
  if (r == s) return {Nesting::equal, std::nullopt};
  TuningWindow wr = tuning_window(r);
  TuningWindow ws = tuning_window(s);
  if (surd_compare(wr.alpha0, ws.omega) != std::strong_ordering::greater ||
      surd_compare(ws.alpha0, wr.omega) != std::strong_ordering::greater)
    return {Nesting::disjoint, std::nullopt};
  auto inside = [](const TuningWindow& inner, const TuningWindow& outer) {
    return surd_compare(outer.omega, inner.omega) != std::strong_ordering::greater &&
           surd_compare(inner.alpha0, outer.alpha0) != std::strong_ordering::greater;
  };
  auto witness = [](const Rational& inner, const Rational& outer) {
    std::optional<CFString> p = tau_inverse_string(outer, expansions_of_rational(inner).even);
    if (!p) throw std::logic_error("nested tuning windows without a tuning witness");
    return value_of(*p);
  };
  if (inside(wr, ws)) return {Nesting::r_inside_s, witness(r, s)};
  if (inside(ws, wr)) return {Nesting::s_inside_r, witness(s, r)};
  throw std::logic_error("tuning windows overlap without nesting");
}

std::vector<Rational> untuned_factorization(const Rational& r) {
  require_extremal(r, "untuned_factorization");
  const CFString s0 = expansions_of_rational(r).even;
  const BigInt norm = s0.norm1();

  struct Candidate {
    BigInt norm;
    Rational s;
  };
  std::vector<Candidate> candidates;
  for (std::size_t len = 1; len < s0.size(); len += 2) {
    CFString prefix = s0.prefix(len);
    BigInt pn = prefix.norm1();
    if (pn >= norm || norm % pn != 0) continue;
    Rational s = value_of(prefix);
    if (s >= 1 || !is_extremal(s)) continue;
    candidates.push_back({pn, s});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.norm < b.norm; });

  for (const Candidate& c : candidates) {
    std::optional<CFString> inner = tau_inverse_string(c.s, s0);
    if (!inner || inner->odd()) continue;
    Rational p = value_of(*inner);
    if (p >= 1 || !is_extremal(p) || expansions_of_rational(p).even != *inner) continue;
    std::vector<Rational> out{c.s};
    std::vector<Rational> rest = untuned_factorization(p);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  return {r};
}

bool is_untuned(const Rational& r) { return untuned_factorization(r).size() == 1; }

Rational compose_generators(const std::vector<Rational>& factors) {
  if (factors.empty()) throw std::domain_error("compose_generators needs at least one factor");
  // tau_a o tau_b = tau_{tau_a(b)}, folded from the innermost pair outward.
  Rational acc = factors.back();
  for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) acc = tau_value(*it, acc);
  return acc;
}

}  // namespace alphacf
