#pragma once

// Test-only reference implementations, written without the library's
// algorithms, plus small random generators for property tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "alphacf/cf_string.hpp"
#include "alphacf/surd.hpp"

namespace oracle {

using Digits = std::vector<long>;

/// Euclidean expansion of p/q in (0,1], last digit >= 2 unless p/q = 1.
inline Digits euclid(long p, long q) {
  Digits out;
  while (p != 0) {
    out.push_back(q / p);
    long r = q % p;
    q = p;
    p = r;
  }
  return out;
}

/// The even-length expansion of p/q.
inline Digits even_expansion(long p, long q) {
  Digits d = euclid(p, q);
  if (d.size() % 2 == 1) {
    if (d.back() == 1) {
      d.pop_back();
      d.back() += 1;
    } else {
      d.back() -= 1;
      d.push_back(1);
    }
  }
  return d;
}

inline Digits odd_expansion(long p, long q) {
  Digits d = euclid(p, q);
  if (d.size() % 2 == 0) {
    if (d.back() == 1) {
      d.pop_back();
      d.back() += 1;
    } else {
      d.back() -= 1;
      d.push_back(1);
    }
  }
  return d;
}

/// Sign of [0;(a)] - [0;(b)] for purely periodic expansions, by streaming
/// digits until the first difference.
inline int compare_periodic(const Digits& a, const Digits& b) {
  const std::size_t span = std::lcm(a.size(), b.size());
  for (std::size_t i = 0; i < span; ++i) {
    long x = a[i % a.size()];
    long y = b[i % b.size()];
    if (x == y) continue;
    // A larger digit at an even index gives a smaller value.
    bool a_smaller = (i % 2 == 0) ? x > y : x < y;
    return a_smaller ? -1 : 1;
  }
  return 0;
}

/// [0;(d)] <= g, where g = [0;(1)].
inline bool periodic_at_most_g(const Digits& d) { return compare_periodic(d, Digits{1}) <= 0; }

struct Interval {
  Digits lo;  // odd expansion, left endpoint [0;(lo)]
  Digits hi;  // even expansion, right endpoint [0;(hi)]
};

inline Interval interval_of(long p, long q) { return {odd_expansion(p, q), even_expansion(p, q)}; }

/// I_r maximal among quadratic intervals and to the left of g.
///
/// I_r inside I_s forces r in I_s, hence |r - s| < 1/q_s^2 and so
/// |p_r q_s - p_s q_r| q_s < q_r; that leaves only q_s < q_r to test.
struct ExtremalityOracle {
  long equal_intervals_seen = 0;

  bool operator()(long p, long q) {
    Interval ir = interval_of(p, q);
    if (!periodic_at_most_g(ir.hi)) return false;
    for (long qs = 1; qs < q; ++qs) {
      long centre = p * qs / q;
      for (long ps = std::max(1L, centre - 1); ps <= std::min(qs, centre + 2); ++ps) {
        if (std::gcd(ps, qs) != 1 || ps >= qs) continue;
        long gap = std::labs(p * qs - ps * q);
        if (gap * qs >= q) continue;
        Interval is = interval_of(ps, qs);
        int lo = compare_periodic(is.lo, ir.lo);
        int hi = compare_periodic(ir.hi, is.hi);
        if (lo == 0 && hi == 0) {
          ++equal_intervals_seen;
          continue;
        }
        if (lo <= 0 && hi <= 0) return false;
      }
    }
    return true;
  }
};

/// Alternating digit sum over a digit vector.
inline long alternating_sum(const Digits& d) {
  long s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i % 2 == 0) ? d[i] : -d[i];
  return s;
}

// Generators.

inline alphacf::CFString random_string(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len,
                                       alphacf::Digit max_digit) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<alphacf::Digit> digit(1, max_digit);
  std::vector<alphacf::Digit> out(len(rng));
  for (auto& d : out) d = digit(rng);
  return alphacf::CFString(std::move(out));
}

/// A random quadratic irrational in (0,1) as an eventually periodic expansion.
inline alphacf::PeriodicCF random_periodic(std::mt19937_64& rng, std::size_t max_pre, std::size_t max_per,
                                           alphacf::Digit max_digit) {
  return alphacf::PeriodicCF(random_string(rng, 0, max_pre, max_digit), random_string(rng, 1, max_per, max_digit));
}

inline alphacf::Surd random_surd(std::mt19937_64& rng, std::size_t max_pre = 3, std::size_t max_per = 4,
                                 alphacf::Digit max_digit = 5) {
  return alphacf::surd_from_periodic(random_periodic(rng, max_pre, max_per, max_digit));
}

}  // namespace oracle
