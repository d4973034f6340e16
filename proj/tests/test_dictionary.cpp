#include <doctest.h>

#include <random>

#include "alphacf/dictionary.hpp"
#include "alphacf/quadratic_intervals.hpp"
#include "alphacf/tuning.hpp"
#include "oracles.hpp"

using namespace alphacf;

TEST_CASE("binary angle normal form and value") {
  BinaryAngle a("0", "10");
  CHECK(a.preperiod().empty());
  CHECK(a.period() == "01");
  CHECK(a.value() == make_rational(1, 3));
  CHECK(BinaryAngle("", "0101") == BinaryAngle("", "01"));
  CHECK(BinaryAngle("01", "1").value() == make_rational(1, 2));
  // The two expansions of 1/2 stay distinct.
  CHECK(BinaryAngle("01", "1") != BinaryAngle("1", "0"));
  CHECK(BinaryAngle("1", "0").value() == make_rational(1, 2));
  CHECK(a.take(5) == "01010");
  CHECK_THROWS_AS(BinaryAngle("2", "1"), std::domain_error);
  CHECK_THROWS_AS(BinaryAngle("0", ""), std::domain_error);
}

TEST_CASE("phi on known points") {
  CHECK(phi(golden_mean()).value() == make_rational(1, 3));
  CHECK(phi(Surd::sqrt(2) - Surd(1)) == BinaryAngle("", "0110"));
  CHECK(phi(Rational(0)).value() == make_rational(1, 2));
  CHECK(phi(Rational(1)).value() == make_rational(1, 4));
  CHECK(phi_prefix(CFString{2, 1, 3}) == "0110111");
}

TEST_CASE("phi is strictly decreasing") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 500; ++trial) {
    Surd x = oracle::random_surd(rng, 3, 4, 5);
    Surd y = oracle::random_surd(rng, 3, 4, 5);
    if (x == y) continue;
    if (y < x) std::swap(x, y);
    CHECK(phi(x).value() > phi(y).value());
  }
}

TEST_CASE("phi of an eventually periodic expansion agrees with its prefixes") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    PeriodicCF cf = oracle::random_periodic(rng, 3, 3, 4);
    CFString prefix = cf.take(12);
    std::string bits = phi_prefix(prefix);
    CHECK(phi(cf).take(bits.size()) == bits);
  }
}

TEST_CASE("root angles") {
  CHECK(root_angles(make_rational(1, 2)) == std::pair<std::string, std::string>("01", "10"));
  CHECK(root_angles(make_rational(1, 3)) == std::pair<std::string, std::string>("011", "100"));
  for (const Rational& r : enumerate_qe_rationals(20, Execution::serial)) {
    auto [s0, s1] = root_angles(r);
    REQUIRE(s0.size() == s1.size());
    for (std::size_t i = 0; i < s0.size(); ++i) CHECK(s0[i] != s1[i]);
  }
  CHECK_THROWS_AS(root_angles(make_rational(2, 3)), std::domain_error);
}

TEST_CASE("substitution tuning") {
  CHECK(tau_w("01", "10", BinaryAngle("", "01")) == BinaryAngle("", "0110"));
  CHECK(tau_w("01", "10", BinaryAngle("", "0")) == BinaryAngle("", "01"));
  BinaryAngle theta("011", "01");
  CHECK(tau_w("0", "1", theta) == theta);
  CHECK_THROWS_AS(tau_w("01", "1", theta), std::domain_error);
}

TEST_CASE("real-ray test") {
  CHECK(is_real_ray(BinaryAngle("", "01")));
  CHECK(is_real_ray(BinaryAngle("1", "0")));
  CHECK(is_real_ray(BinaryAngle("", "011")));
  CHECK_FALSE(is_real_ray(BinaryAngle("", "0011")));  // 1/5: T = 2/5, T^2 = 4/5
}

TEST_CASE("a false real-ray case turns up among short periods") {
  int falses = 0;
  for (unsigned len = 1; len <= 6; ++len)
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::string period;
      for (unsigned i = 0; i < len; ++i) period.push_back((bits >> (len - 1 - i)) & 1 ? '1' : '0');
      falses += !is_real_ray(BinaryAngle("", period));
    }
  CHECK(falses > 0);
}

TEST_CASE("phi maps E into real rays") {
  std::mt19937_64 rng(71);
  int members = 0;
  for (int trial = 0; trial < 5000 && members < 100; ++trial) {
    Surd x = oracle::random_surd(rng, 2, 4, 4);
    if (!in_bifurcation_set(x)) continue;
    ++members;
    BinaryAngle theta = phi(x);
    CHECK(theta.value() <= make_rational(1, 2));
    CHECK_MESSAGE(is_real_ray(theta), format_exact(x));
  }
  CHECK(members == 100);
}

TEST_CASE("substitution tuning commutes with tau under phi") {
  std::mt19937_64 rng(73);
  for (const Rational& r : enumerate_qe_rationals(10, Execution::serial))
    for (int trial = 0; trial < 20; ++trial) {
      CFString x = oracle::random_string(rng, 40, 40, 6);
      CHECK_MESSAGE(commutation_check(r, x, 40), to_string(r) << " " << x.to_string());
    }
  CHECK(commutation_check(make_rational(1, 2), golden_mean()));
  CHECK(commutation_check(make_rational(1, 3), Surd(0)));
  CHECK(commutation_check(make_rational(1, 3), CFString{3, 1, 4, 1, 5, 9, 2, 6}, 40));
}

TEST_CASE("exact commutation on quadratic irrationals") {
  std::mt19937_64 rng(79);
  for (const Rational& r : enumerate_qe_rationals(10, Execution::serial))
    for (int trial = 0; trial < 5; ++trial) CHECK(commutation_check(r, oracle::random_surd(rng)));
}
