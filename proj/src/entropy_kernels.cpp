#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <stdexcept>

#include "alphacf/alpha_dynamics.hpp"

namespace alphacf {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 applied to the seed offset by the stream index.
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

constexpr double kRestartThreshold = 1e-15;

struct ReplicaResult {
  double mean{0};
  std::uint64_t restarts{0};
};

// Orbits are carried in long double. In double precision the map on
// representable numbers falls into cycles of roughly 10^7 points within a
// few times 10^7 steps, shared across starting points, which biases the
// Birkhoff average at the 1e-4 level and hides it from the replica spread.
// The 64-bit mantissa pushes the cycle scale far beyond any run length.
using OrbitFloat = long double;

ReplicaResult run_replica(double alpha, std::uint64_t stream_seed, std::uint64_t iterations, std::uint64_t burn_in) {
  std::mt19937_64 rng(stream_seed);
  std::uniform_real_distribution<double> start(alpha - 1.0, alpha);
  auto fresh = [&]() {
    double x = 0.0;
    while (std::fabs(x) < kRestartThreshold) x = start(rng);
    return static_cast<OrbitFloat>(x);
  };
  const OrbitFloat a = alpha;
  auto step = [a](OrbitFloat x) {
    OrbitFloat inv = 1 / std::fabs(x);
    return inv - std::floor(inv + 1 - a);
  };

  ReplicaResult out;
  OrbitFloat x = fresh();
  bool warm = false;
  std::uint64_t done = 0;
  double sum = 0.0;
  while (done < iterations) {
    if (!warm) {
      for (std::uint64_t k = 0; k < burn_in && std::fabs(x) >= kRestartThreshold; ++k) x = step(x);
      warm = true;
    }
    if (std::fabs(x) < kRestartThreshold) {
      ++out.restarts;
      x = fresh();
      warm = false;
      continue;
    }
    sum += std::log(std::fabs(static_cast<double>(x)));
    x = step(x);
    ++done;
  }
  out.mean = -2.0 * sum / static_cast<double>(iterations);
  return out;
}

void check_config(double alpha, const EntropyConfig& config) {
  if (!(alpha > 0.0) || alpha > 1.0) throw std::domain_error("entropy estimate needs 0 < alpha <= 1");
  if (config.replicas < 2) throw std::domain_error("entropy estimate needs at least two replicas");
  if (config.iterations == 0) throw std::domain_error("entropy estimate needs iterations > 0");
}

EntropyEstimate combine(double alpha, std::uint64_t seed, const EntropyConfig& config, const ReplicaResult* replicas) {
  EntropyEstimate e;
  e.alpha = alpha;
  e.iterations = config.iterations;
  e.burn_in = config.burn_in;
  e.seed = seed;
  e.replicas = config.replicas;
  const int n = config.replicas;
  double mean = 0.0;
  for (int j = 0; j < n; ++j) {
    mean += replicas[j].mean;
    e.restarts += replicas[j].restarts;
  }
  mean /= n;
  double var = 0.0;
  for (int j = 0; j < n; ++j) var += (replicas[j].mean - mean) * (replicas[j].mean - mean);
  var /= (n - 1);
  e.value = mean;
  e.std_error = std::sqrt(var / n);
  return e;
}

}  // namespace

std::vector<EntropyEstimate> entropy_at(const std::vector<double>& alphas, std::uint64_t seed,
                                        const EntropyConfig& config) {
  for (double a : alphas) check_config(a, config);
  const long rows = static_cast<long>(alphas.size());
  const long reps = config.replicas;
  std::vector<std::uint64_t> row_seeds(alphas.size());
  for (long i = 0; i < rows; ++i) row_seeds[static_cast<std::size_t>(i)] = derive_seed(seed, static_cast<std::uint64_t>(i));

  // Every (row, replica) task owns its RNG stream and output slot.
  std::vector<ReplicaResult> slots(static_cast<std::size_t>(rows * reps));
  auto task = [&](long t) {
    const long i = t / reps;
    const long j = t % reps;
    const auto ui = static_cast<std::size_t>(i);
    slots[static_cast<std::size_t>(t)] =
        run_replica(alphas[ui], derive_seed(row_seeds[ui], static_cast<std::uint64_t>(j)), config.iterations, config.burn_in);
  };
  if (config.exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < rows * reps; ++t) task(t);
  } else {
    for (long t = 0; t < rows * reps; ++t) task(t);
  }

  std::vector<EntropyEstimate> out;
  out.reserve(alphas.size());
  for (long i = 0; i < rows; ++i)
    out.push_back(combine(alphas[static_cast<std::size_t>(i)], row_seeds[static_cast<std::size_t>(i)], config,
                          &slots[static_cast<std::size_t>(i * reps)]));
  return out;
}

EntropyEstimate entropy_estimate(double alpha, std::uint64_t seed, const EntropyConfig& config) {
  check_config(alpha, config);
  std::vector<ReplicaResult> slots(static_cast<std::size_t>(config.replicas));
  const long reps = config.replicas;
  if (config.exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (long j = 0; j < reps; ++j)
      slots[static_cast<std::size_t>(j)] =
          run_replica(alpha, derive_seed(seed, static_cast<std::uint64_t>(j)), config.iterations, config.burn_in);
  } else {
    for (long j = 0; j < reps; ++j)
      slots[static_cast<std::size_t>(j)] =
          run_replica(alpha, derive_seed(seed, static_cast<std::uint64_t>(j)), config.iterations, config.burn_in);
  }
  return combine(alpha, seed, config, slots.data());
}

std::vector<EntropyEstimate> entropy_scan(double lo, double hi, int points, std::uint64_t seed,
                                          const EntropyConfig& config) {
  if (!(lo > 0.0) || !(lo < hi) || hi > 1.0) throw std::domain_error("entropy_scan needs 0 < lo < hi <= 1");
  if (points < 1) throw std::domain_error("entropy_scan needs at least one point");
  std::vector<double> alphas(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    alphas[static_cast<std::size_t>(i)] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  return entropy_at(alphas, seed, config);
}

void write_entropy_csv(std::ostream& out, const std::vector<EntropyEstimate>& rows) {
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << "alpha,h,stderr,iterations,restarts,seed\n";
  out << std::setprecision(12);
  for (const EntropyEstimate& e : rows)
    out << e.alpha << ',' << e.value << ',' << e.std_error << ',' << e.iterations << ',' << e.restarts << ',' << e.seed
        << '\n';
  out.flags(old_flags);
  out.precision(old_precision);
}

}  // namespace alphacf
