#include "alphacf/classification.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace alphacf {

namespace {

bool digits_match(const PeriodicCF& cf, std::size_t pos, const CFString& block) {
  for (std::size_t i = 0; i < block.size(); ++i)
    if (cf.digit(pos + i) != block[i]) return false;
  return true;
}

// Group a block sequence (1 = S1, 0 = S0) into digits: S1 S0^k -> k + 1.
std::vector<Digit> group_sizes(const std::vector<int>& blocks) {
  std::vector<Digit> out;
  for (int b : blocks) {
    if (b == 1)
      out.push_back(1);
    else
      ++out.back();
  }
  return out;
}

// Parses cf from position |S1| onward over {S0, S1}, the first block being
// S1. The digit stream is eventually periodic, so the parse is too: it is
// cut at the first block whose start position repeats modulo the period.
std::optional<Surd> pull_back(const PeriodicCF& cf, const RationalExpansions& e) {
  const std::size_t pre = cf.preperiod().size();
  const std::size_t per = cf.period().size();
  auto state = [pre, per](std::size_t p) { return p < pre ? p : pre + (p - pre) % per; };

  std::vector<int> blocks{1};
  std::map<std::size_t, std::size_t> seen{{state(0), 0}};
  std::size_t p = e.odd.size();
  std::size_t cut = 0;
  while (true) {
    auto it = seen.find(state(p));
    if (it != seen.end()) {
      cut = it->second;
      break;
    }
    seen.emplace(state(p), blocks.size());
    if (digits_match(cf, p, e.odd)) {
      blocks.push_back(1);
      p += e.odd.size();
    } else if (digits_match(cf, p, e.even)) {
      blocks.push_back(0);
      p += e.even.size();
    } else {
      return std::nullopt;
    }
  }

  std::vector<int> head(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(cut));
  std::vector<int> cycle(blocks.begin() + static_cast<std::ptrdiff_t>(cut), blocks.end());
  bool cycle_has_s1 = false;
  for (int b : cycle) cycle_has_s1 |= b == 1;

  if (!cycle_has_s1) {
    // S0 forever: the last digit is infinite and drops out.
    std::vector<Digit> digits = group_sizes(head);
    digits.pop_back();
    if (digits.empty()) return Surd(0);
    return Surd(value_of(CFString(std::move(digits))));
  }
  while (cycle.front() != 1) {
    head.push_back(cycle.front());
    cycle.erase(cycle.begin());
    cycle.push_back(head.back());
  }
  return surd_from_periodic(PeriodicCF(CFString(group_sizes(head)), CFString(group_sizes(cycle))));
}

Rational compose_prefix(const std::vector<Rational>& chain, std::size_t count) {
  return compose_generators(std::vector<Rational>(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(count)));
}

MonotonicityClass interval_verdict(const QuadraticInterval& iv) {
  if (iv.index > 0) return MonotoneIncreasing{iv};
  if (iv.index < 0) return MonotoneDecreasing{iv};
  return MonotoneConstantOnInterval{iv};
}

}  // namespace

std::string class_tag(const MonotonicityClass& c) {
  struct Tag {
    std::string operator()(const MonotoneIncreasing&) const { return "MonotoneIncreasing"; }
    std::string operator()(const MonotoneDecreasing&) const { return "MonotoneDecreasing"; }
    std::string operator()(const MonotoneConstantOnInterval&) const { return "MonotoneConstantOnInterval"; }
    std::string operator()(const PhaseTransition&) const { return "PhaseTransition"; }
    std::string operator()(const LocallyConstant&) const { return "LocallyConstant"; }
    std::string operator()(const Mixed&) const { return "Mixed"; }
    std::string operator()(const Unclassified&) const { return "Unclassified"; }
  };
  return std::visit(Tag{}, c);
}

std::optional<TuningParse> outermost_tuning(const Surd& alpha) {
  if (alpha.is_rational()) throw std::domain_error("outermost_tuning needs an irrational surd");
  PeriodicCF cf = cf_of_surd(alpha);
  const std::size_t pre = cf.preperiod().size();
  const std::size_t per = cf.period().size();
  const std::size_t bound = pre + per * (per + 1);
  // The shortest S1 prefix belongs to the outermost window, whose generator
  // is untuned.
  for (std::size_t len = 1; len <= bound; len += 2) {
    Rational r = value_of(cf.take(len));
    if (r >= 1 || !is_extremal(r)) continue;
    RationalExpansions e = expansions_of_rational(r);
    std::optional<Surd> y = pull_back(cf, e);
    if (y) return TuningParse{r, *y};
  }
  return std::nullopt;
}

RenormalizationChain renormalization_chain(const Surd& alpha) {
  RenormalizationChain out;
  out.pullback = alpha;
  const Surd g = golden_mean();
  while (!out.pullback.is_zero() && !out.pullback.is_rational() && out.pullback != g) {
    if (out.chain.size() == kChainCap) {
      out.capped = true;
      break;
    }
    std::optional<TuningParse> t = outermost_tuning(out.pullback);
    if (!t) break;
    out.chain.push_back(t->r);
    out.pullback = t->pullback;
  }
  if (out.pullback.is_rational() && !out.pullback.is_zero())
    throw std::logic_error("renormalization pulled an element of E back to a nonzero rational");
  return out;
}

MonotonicityClass classify_parameter(const Surd& alpha) {
  if (alpha.sign() <= 0 || surd_compare(alpha, Surd(1)) == std::strong_ordering::greater)
    throw std::domain_error("classify_parameter needs 0 < alpha <= 1");
  const Surd g = golden_mean();
  std::strong_ordering vs_g = surd_compare(alpha, g);
  if (vs_g == std::strong_ordering::equal) return PhaseTransition{};
  if (vs_g == std::strong_ordering::greater) return MonotoneDecreasing{};

  if (alpha.is_rational() || !in_bifurcation_set(alpha)) {
    IntervalSearch found = maximal_interval_containing(alpha);
    if (auto* iv = std::get_if<QuadraticInterval>(&found)) return interval_verdict(*iv);
    if (std::holds_alternative<NotFound>(found))
      throw std::logic_error("parameter outside E has no maximal quadratic interval");
    return Unclassified{"maximal interval search exceeded its denominator bound"};
  }

  RenormalizationChain rc = renormalization_chain(alpha);
  if (rc.capped) return Unclassified{"renormalization chain exceeded " + std::to_string(kChainCap) + " levels"};

  for (std::size_t k = 0; k < rc.chain.size(); ++k) {
    if (matching_index(rc.chain[k]) != 0) continue;
    // alpha sits at the left endpoint of this neutral window exactly when
    // the chain ends here with pullback 0.
    if (k + 1 == rc.chain.size() && rc.pullback.is_zero()) return Mixed{rc.chain, rc.pullback};
    return LocallyConstant{tuning_window(compose_prefix(rc.chain, k + 1)), rc.chain};
  }
  if (rc.pullback == g) return PhaseTransition{compose_generators(rc.chain), rc.chain};
  return Mixed{rc.chain, rc.pullback};
}

PlateauVerdict plateau_verdict(const Rational& r) {
  std::vector<Rational> factors = untuned_factorization(r);
  if (factors.size() == 1) {
    if (matching_index(r) == 0) return PlateauNR{r};
    return NotPlateau{"matching index of " + to_string(r) + " is nonzero"};
  }
  const Rational& r0 = factors.back();
  if (matching_index(r0) != 0) return NotPlateau{"innermost factor " + to_string(r0) + " is not neutral"};
  for (std::size_t k = 0; k + 1 < factors.size(); ++k)
    if (matching_index(factors[k]) == 0)
      return NotPlateau{"outer factor " + to_string(factors[k]) + " is neutral, so W_r lies inside a larger plateau"};
  Rational r1 = compose_prefix(factors, factors.size() - 1);
  return PlateauFR{r0, r1, factors};
}

bool is_dominant(const CFString& s) {
  if (s.empty() || s.odd()) return false;
  for (std::size_t k = 1; k < s.size(); ++k)
    if (!ll(s, s.suffix_from(k))) return false;
  return true;
}

CFString extend_dominant(const CFString& s0, const CFString& b, long m) {
  if (s0.size() >= 2 && s0[0] == s0[1]) throw std::domain_error("a dominant string cannot begin with two equal digits");
  if (!is_dominant(s0)) throw std::domain_error("extend_dominant needs a dominant S0");
  if (b.empty() || b.odd() || b.size() >= s0.size() || !s0.ends_with(b))
    throw std::domain_error("extend_dominant needs an even-length proper suffix B");
  if (m < 1) throw std::domain_error("extend_dominant needs m >= 1");
  CFString out = s0.power(static_cast<std::size_t>(m)) + b;
  if (!is_dominant(out)) throw std::logic_error("S0^m B is not dominant");
  return out;
}

WitnessFamilies witness_families(long n) {
  if (n <= 2) throw std::domain_error("witness_families needs n > 2");
  auto make = [](const CFString& s0, const BigInt& expected) {
    Rational r = value_of(s0);
    if (!is_extremal(r)) throw std::logic_error("witness " + s0.to_string() + " is not extremal");
    QuadraticInterval iv = build_interval(r);
    if (iv.index != expected) throw std::logic_error("witness " + s0.to_string() + " has an unexpected index");
    return iv;
  };
  return {make(CFString{n, 1}, BigInt(n - 1)), make(CFString{n, n}, BigInt(0)),
          make(CFString{n + 1, n, 1, n}, BigInt(2 - n))};
}

DimensionBounds dimension_bounds(const std::vector<CFString>& alphabet) {
  if (alphabet.empty()) throw std::domain_error("dimension_bounds needs a non-empty alphabet");
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i].empty()) throw std::domain_error("dimension_bounds: empty word");
    for (std::size_t j = 0; j < alphabet.size(); ++j)
      if (i != j && alphabet[j].starts_with(alphabet[i]))
        throw std::domain_error("dimension_bounds: " + alphabet[i].to_string() + " is a prefix of " +
                                alphabet[j].to_string());
  }
  DimensionBounds out;
  out.alphabet = alphabet;
  out.n = alphabet.size();
  double q_min = INFINITY;
  double q_max = 0;
  for (const CFString& w : alphabet) {
    double q = q_of(w).get_d();
    q_min = std::min(q_min, q);
    q_max = std::max(q_max, q);
  }
  out.m1 = 1.0 / (4.0 * q_max * q_max);
  out.m2 = 1.0 / (q_min * q_min);
  const double log_n = std::log(static_cast<double>(out.n));
  out.lower = log_n / (std::log(4.0) + 2.0 * std::log(q_max));
  out.upper = out.n == 1 ? 0.0 : log_n / (2.0 * std::log(q_min));
  return out;
}

MixedWitnesses mixed_witnesses(const Surd& alpha, double radius, long max_denominator) {
  MixedWitnesses out;
  out.radius = radius;
  out.max_denominator = max_denominator;
  const double a = alpha.to_double();
  for (const Rational& r : enumerate_qe_rationals(max_denominator)) {
    double rd = r.get_d();
    if (rd < a - radius || rd > a + radius) continue;
    QuadraticInterval iv = build_interval(r);
    if (iv.alpha1.to_double() <= a - radius || iv.alpha0.to_double() >= a + radius) continue;
    auto& slot = iv.index > 0 ? out.increasing : (iv.index < 0 ? out.decreasing : out.constant);
    // Keep the interval closest to alpha.
    if (!slot || std::fabs(rd - a) < std::fabs(slot->r.get_d() - a)) slot = iv;
  }
  return out;
}

}  // namespace alphacf
