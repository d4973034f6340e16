#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "alphacf/cf_string.hpp"
#include "alphacf/execution.hpp"
#include "alphacf/surd.hpp"

namespace alphacf {

/// One iterate of T_alpha together with the digit c emitted to reach it.
/// The absorbing point 0 maps to itself with digit 0.
template <class T>
struct OrbitPoint {
  T value;
  std::size_t step{0};
  long digit{0};
};

/// T_alpha(x) = 1/|x| - c with c = floor(1/|x| + 1 - alpha); T_alpha(0) = 0.
/// Exact kinds check x in [alpha-1, alpha]; surds must share one field.
OrbitPoint<Rational> t_alpha_step(const Rational& alpha, const Rational& x);
OrbitPoint<Surd> t_alpha_step(const Surd& alpha, const Surd& x);
OrbitPoint<double> t_alpha_step(double alpha, double x);

/// x followed by n iterates.
std::vector<OrbitPoint<Rational>> t_alpha_orbit(const Rational& alpha, const Rational& x, std::size_t n);

/// (N, M): digit sums over even and odd 1-based positions of S0(r).
std::pair<BigInt, BigInt> nm_exponents(const Rational& r);

enum class MatchStatus { verified, orbit_hit_zero, mismatch };

struct MatchResult {
  MatchStatus status{MatchStatus::mismatch};
  std::size_t steps_plus{0};   // N + 1, applied to alpha
  std::size_t steps_minus{0};  // M + 1, applied to alpha - 1
  Rational value_plus;
  Rational value_minus;
};

/// Checks T^(N+1)(alpha) = T^(M+1)(alpha - 1) exactly for alpha in I_r.
MatchResult verify_matching(const Rational& r, const Rational& alpha);

/// A rational at relative position `fraction` in (0,1) across I_r, built
/// from endpoint approximations accurate to far below the interval width.
Rational interval_point(const Rational& r, const Rational& fraction);

struct MatchingReport {
  long intervals{0};
  long points{0};
  long verified{0};
  long mismatches{0};
  long hit_zero{0};       // sample points whose orbit reached 0 first
  long hit_zero_resolved{0};  // of those, verified at a perturbed point
  std::vector<std::string> failures;
  bool ok() const { return mismatches == 0 && hit_zero == hit_zero_resolved && verified == points; }
};

/// verify_matching at the quartile points of every I_r with r in Q_E and
/// denominator <= max_denominator; a point whose orbit hits 0 is moved
/// slightly and retried.
MatchingReport check_matching(long max_denominator, Execution exec = Execution::parallel);

struct EntropyEstimate {
  double alpha{0};
  double value{0};      // nats
  double std_error{0};  // across replicas
  std::uint64_t iterations{0};  // per replica
  std::uint64_t burn_in{0};
  std::uint64_t seed{0};
  std::uint64_t restarts{0};
  int replicas{0};
};

struct EntropyConfig {
  std::uint64_t iterations{10'000'000};
  std::uint64_t burn_in{1000};
  int replicas{8};
  Execution exec{Execution::parallel};
};

/// Birkhoff average of log|T'| = 2 log(1/|x|) over independent replicas.
EntropyEstimate entropy_estimate(double alpha, std::uint64_t seed, const EntropyConfig& config = {});

/// Evenly spaced alphas from lo to hi inclusive. Row i uses the seed
/// derive_seed(seed, i), so any row can be reproduced on its own.
std::vector<EntropyEstimate> entropy_scan(double lo, double hi, int points, std::uint64_t seed,
                                          const EntropyConfig& config = {});

/// Entropy at each of the given alphas, row i seeded as in entropy_scan.
std::vector<EntropyEstimate> entropy_at(const std::vector<double>& alphas, std::uint64_t seed,
                                        const EntropyConfig& config = {});

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Closed form for g <= alpha <= 1 and the plateau [1/2, g]; NaN elsewhere.
double closed_form_entropy(double alpha);

/// alpha,h,stderr,iterations,restarts,seed with 12 significant digits.
void write_entropy_csv(std::ostream& out, const std::vector<EntropyEstimate>& rows);

}  // namespace alphacf
