#include <doctest.h>

#include <cmath>

#include "primewave/zeta.hpp"

using namespace primewave;

namespace {

// brute-force zeta oracle: direct sum plus integral tail bracket
double zeta_brute(double s, uint64_t terms, double* bracket_halfwidth) {
  KahanSum acc;
  for (uint64_t n = terms; n >= 1; --n) acc.add(std::pow(double(n), -s));
  // integral bracket: N^(1-s)/(s-1) bounds the tail between N and N+1 starts
  double hi = std::pow(double(terms), 1.0 - s) / (s - 1.0);
  double lo = std::pow(double(terms + 1), 1.0 - s) / (s - 1.0);
  *bracket_halfwidth = 0.5 * (hi - lo);
  return acc.value() + 0.5 * (hi + lo);
}

// simple adaptive Simpson as an independent li oracle
double simpson(double a, double b, int depth) {
  auto f = [](double t) { return 1.0 / std::log(t); };
  double m = 0.5 * (a + b);
  double coarse = (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
  double fine = (m - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + m)) + f(m)) +
                (b - m) / 6.0 * (f(m) + 4.0 * f(0.5 * (m + b)) + f(b));
  if (depth > 30 || std::abs(fine - coarse) < 1e-12 * std::abs(fine))
    return fine;
  return simpson(a, m, depth + 1) + simpson(m, b, depth + 1);
}

}  // namespace

TEST_CASE("riemann zeta hits analytic identities") {
  CHECK(riemann_zeta(2.0) ==
        doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-12));
  CHECK(riemann_zeta(4.0) ==
        doctest::Approx(M_PI * M_PI * M_PI * M_PI / 90.0).epsilon(1e-12));
  CHECK_THROWS_AS(riemann_zeta(1.0), Error);
  CHECK_THROWS_AS(riemann_zeta(0.5), Error);
}

TEST_CASE("riemann zeta at 1.5 matches the brute-force oracle") {
  double halfwidth = 0.0;
  double brute = zeta_brute(1.5, 10000000, &halfwidth);
  CHECK(halfwidth < 1e-9);
  CHECK(std::abs(riemann_zeta(1.5) - brute) <= halfwidth + 1e-9);
}

TEST_CASE("moebius values") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK(moebius(49) == 0);
  CHECK_THROWS_AS(moebius(0), Error);
}

TEST_CASE("moebius over n weighted sum drifts to zero") {
  KahanSum acc;
  for (uint64_t n = 1; n <= 100000; ++n)
    acc.add(double(moebius(n)) / double(n));
  CHECK(std::abs(acc.value()) < 1e-2);
}

TEST_CASE("prime zeta explicit formula") {
  auto table = sieve(1000000);
  auto p2 = prime_zeta(2.0, table);
  CHECK(p2.value == doctest::Approx(0.4522474200410655).epsilon(1e-9));
  CHECK(p2.tail_estimate >= 0.0);
  CHECK(p2.truncation_bound == 1000000);

  auto table4 = sieve(10000);
  auto p4 = prime_zeta(4.0, table4);
  CHECK(p4.value == doctest::Approx(0.0769931397642468).epsilon(1e-9));

  // the explicit-formula total does not depend on the truncation point
  auto small = prime_zeta(2.0, sieve(100));
  CHECK(std::abs(small.value - p2.value) < 1e-8);

  CHECK_THROWS_AS(prime_zeta(1.0, table4), Error);
  CHECK_THROWS_AS(prime_zeta(0.5, table4), Error);
}

TEST_CASE("prime zeta tail dominates nested partial sum differences") {
  auto table = sieve(100000);
  double s3 = partial_prime_power_sum(2.0, table, 1000);
  double s5 = partial_prime_power_sum(2.0, table, 100000);
  auto eval = prime_zeta(2.0, sieve(1000));
  CHECK(eval.tail_estimate >= (s5 - s3) - 1e-15);
}

TEST_CASE("truncated euler product log is positive and decreasing in N") {
  auto table = sieve(100000);
  double prev = log_zeta_euler_tail(table, 100, 2.0);
  CHECK(prev > 0.0);
  for (uint64_t n : {uint64_t(1000), uint64_t(10000), uint64_t(100000)}) {
    double cur = log_zeta_euler_tail(table, n, 2.0);
    CHECK(cur > 0.0);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("log integral") {
  CHECK(log_integral(2.0) == doctest::Approx(1.0451637801).epsilon(1e-7));
  // independent quadrature oracle
  double oracle = 1.0451637801174927848 + simpson(2.0, 1e6, 0);
  CHECK(log_integral(1e6) == doctest::Approx(oracle).epsilon(1e-8));
  // PNT: li(1e6) sits 0.165% above pi(1e6), within the 0.2% band the count
  // oracle actually supports
  auto table = sieve(1000000);
  CHECK(std::abs(log_integral(1e6) - double(table.count())) <=
        0.002 * double(table.count()));
  // monotone in x
  double prev = log_integral(2.5);
  for (double x : {5.0, 10.0, 100.0, 10000.0}) {
    CHECK(log_integral(x) > prev);
    prev = log_integral(x);
  }
  CHECK_THROWS_AS(log_integral(1.0), Error);
  CHECK_THROWS_AS(log_integral(0.5), Error);
}

TEST_CASE("partial prime power sums") {
  auto table = sieve(1000000);
  CHECK(partial_prime_power_sum(1.0, table, 10) ==
        doctest::Approx(0.5 + 1.0 / 3.0 + 0.2 + 1.0 / 7.0).epsilon(1e-15));
  CHECK_THROWS_AS(partial_prime_power_sum(1.0, table, 10000000), Error);

  // Mertens: sum 1/p - ln ln n settles near M
  double mert =
      partial_prime_power_sum(1.0, table, 1000000) - std::log(std::log(1e6));
  CHECK(std::abs(mert - mertens_constant()) < 0.02);
}

TEST_CASE("partial sum of p^-1/2 against the leading asymptotic") {
  auto table = sieve(1000000);
  // The first-order asymptotic N^(1-a)/((1-a) ln N) carries an O(1/ln N)
  // correction train; at N = 1e6 the true ratio is 1.218, so the check pins
  // the oracle-computed band rather than a tight match.
  double direct = partial_prime_power_sum(0.5, table, 1000000);
  double asym = std::sqrt(1e6) / (0.5 * std::log(1e6));
  CHECK(direct / asym > 1.0);
  CHECK(direct / asym < 1.35);
  // the ratio approaches 1 from above as N grows
  double direct4 = partial_prime_power_sum(0.5, table, 10000);
  double asym4 = std::sqrt(1e4) / (0.5 * std::log(1e4));
  CHECK(direct / asym < direct4 / asym4);
}

TEST_CASE("mertens constant value") {
  CHECK(mertens_constant() > 0.26);
  CHECK(mertens_constant() < 0.262);
}
