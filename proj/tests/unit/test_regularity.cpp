#include <doctest.h>

#include <cmath>
#include <complex>

#include "primewave/regularity.hpp"
#include "primewave/zeta.hpp"
#include "support/oracles.hpp"

using namespace primewave;

namespace {

const PrimeTable& table() {
  static const PrimeTable t = sieve(10000);
  return t;
}

SampledGraph pure_exponential(double nu, double a, double center) {
  const auto& win = GaborWindow::instance();
  double half = 1.02 * a * win.effective_support(1e-7);
  SampledGraph g;
  g.t_start = center - half;
  g.t_end = center + half;
  size_t points = size_t(2.0 * half * 10.0 * nu / 0.8) + 2;
  g.values.resize(points);
  for (size_t i = 0; i < points; ++i)
    g.values[i] = unit_cycles(frac_cycles(nu, g.t_at(i)));
  return g;
}

SampledGraph function_graph(double (*f)(double), double t0, double t1,
                            size_t points) {
  SampledGraph g;
  g.t_start = t0;
  g.t_end = t1;
  g.values.resize(points);
  for (size_t i = 0; i < points; ++i) g.values[i] = {f(g.t_at(i)), 0.0};
  return g;
}

}  // namespace

TEST_CASE("tabulated window invariants") {
  const auto& win = GaborWindow::instance();
  CHECK(win.support() > 16.0);
  double h = win.table_step();
  // fhat over the table by trapezoid: 1 at zero frequency, vanishing outside
  // the unit band
  for (double y : {0.0, 1.0, 1.3, 2.0, 4.0}) {
    KahanSum acc;
    for (double t = -win.support(); t <= win.support(); t += h)
      acc.add(win.phi(t) * std::cos(y * t));
    double value = acc.value() * h;
    if (y == 0.0) {
      CHECK(std::abs(value - 1.0) <= 1e-10);
    } else {
      CHECK(std::abs(value) <= 1e-8);
    }
  }
  // interior of the band stays positive at the center
  CHECK(GaborWindow::fhat_bump(0.0) == 1.0);
  CHECK(GaborWindow::fhat_bump(1.0) == 0.0);
  CHECK(GaborWindow::fhat_bump(-1.0) == 0.0);
}

TEST_CASE("gabor transform of a pure exponential is fhat(0)") {
  double lambda = 200.0;
  for (double a : {0.05, 0.2, 0.8}) {
    auto g = pure_exponential(lambda / kTwoPi, a, 0.0);
    auto G = gabor_transform(g, a, 0.0, lambda);
    CHECK(std::abs(std::abs(G) - 1.0) < 1e-6);
  }
}

TEST_CASE("gabor transform of zero is zero") {
  auto g = pure_exponential(200.0 / kTwoPi, 0.3, 0.0);
  for (auto& z : g.values) z = 0.0;
  auto G = gabor_transform(g, 0.3, 0.0, 200.0);
  CHECK(std::abs(G) == 0.0);
}

TEST_CASE("gabor transform is linear") {
  double lambda = 150.0;
  double a = 0.25;
  auto g1 = pure_exponential(lambda / kTwoPi, a, 0.0);
  auto g2 = g1;
  for (size_t i = 0; i < g2.points(); ++i)
    g2.values[i] = unit_cycles(frac_cycles(lambda / kTwoPi * 1.7, g2.t_at(i)));
  auto sum = g1;
  for (size_t i = 0; i < sum.points(); ++i)
    sum.values[i] = g1.values[i] + 2.5 * g2.values[i];
  auto Ga = gabor_transform(g1, a, 0.0, lambda);
  auto Gb = gabor_transform(g2, a, 0.0, lambda);
  auto Gs = gabor_transform(sum, a, 0.0, lambda);
  CHECK(std::abs(Gs - (Ga + 2.5 * Gb)) < 1e-10);
}

TEST_CASE("gabor shift covariance") {
  double lambda = 150.0, a = 0.25, tau = 0.35;
  auto g = pure_exponential(lambda / kTwoPi * 1.41, a, 0.0);
  // the same samples relabeled to t + tau
  SampledGraph shifted = g;
  shifted.t_start += tau;
  shifted.t_end += tau;
  auto G0 = gabor_transform(g, a, 0.0, lambda);
  auto G1 = gabor_transform(shifted, a, tau, lambda);
  auto rot = unit_cycles(frac_cycles(lambda / kTwoPi, -tau));
  CHECK(std::abs(G1 - G0 * rot) < 1e-9 * std::max(1.0, std::abs(G0)));
}

TEST_CASE("gabor rejects an under-resolved grid") {
  SampledGraph g;
  g.t_start = -20.0;
  g.t_end = 20.0;
  g.values.assign(101, {1.0, 0.0});
  CHECK_THROWS_AS(gabor_transform(g, 0.04, 0.0, 500.0), Error);
  try {
    gabor_transform(g, 0.04, 0.0, 500.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::resolution);
    CHECK(std::string(e.what()).find("points") != std::string::npos);
  }
}

TEST_CASE("gabor rejects a window wider than the sampled range") {
  auto g = pure_exponential(200.0 / kTwoPi, 0.05, 0.0);
  CHECK_THROWS_AS(gabor_transform(g, 1.0, 0.0, 200.0), Error);
}

TEST_CASE("theta gap values") {
  // primes 2,3,5,7,11,13: index 2 holds p=5
  CHECK(theta_gap(table(), 1.0, 2) == 2.0);
  CHECK(theta_gap(table(), 1.0, 4) == 2.0);  // p=11: min(4,2)
  CHECK(theta_gap(table(), 2.0, 2) == 16.0); // min(25-9, 49-25)
  CHECK_THROWS_AS(theta_gap(table(), 1.0, 0), Error);
  CHECK_THROWS_AS(theta_gap(table(), 1.0, table().count() - 1), Error);
}

TEST_CASE("single-frequency isolation recovers the coefficient") {
  // small instance of the identity |G_m| = p_m^-alpha
  SeriesParams p{1.2, 2.0, 250, Component::complex_full};
  uint64_t m = table().count_upto(101) - 1;
  CHECK(table().primes[m] == 101);
  double theta = theta_gap(table(), 2.0, m);
  double nu = 101.0 * 101.0;
  const auto& win = GaborWindow::instance();
  double half = 1.02 * (1.0 / theta) * win.effective_support(1e-7);
  size_t points = size_t(2.0 * half * 10.0 * nu / 0.8) + 2;
  auto g = sample_graph(p, table(), 0.5 - half, 0.5 + half, points);
  auto G = gabor_transform(g, 1.0 / theta, 0.5, kTwoPi * nu);
  CHECK(std::abs(G) * std::pow(101.0, 1.2) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("oscillation exponent: Lipschitz line") {
  auto g = function_graph([](double t) { return t; }, 0.0, 1.0, 1 << 16);
  auto est = holder_exponent_oscillation(g, 0.5);
  CHECK(est.exponent == doctest::Approx(1.0).epsilon(0.05));
  CHECK(est.method == HolderMethod::oscillation);
  CHECK(!est.degenerate);
}

TEST_CASE("oscillation exponent: power cusps recover their exponent") {
  for (double s : {0.3, 0.5, 0.8}) {
    SampledGraph g;
    g.t_start = 0.0;
    g.t_end = 1.0;
    g.values.resize(1 << 16);
    for (size_t i = 0; i < g.points(); ++i)
      g.values[i] = {std::pow(std::abs(g.t_at(i) - 0.5), s), 0.0};
    auto est = holder_exponent_oscillation(g, 0.5);
    CHECK(std::abs(est.exponent - s) <= 0.05);
  }
}

TEST_CASE("oscillation exponent: weierstrass 0.5,4 sits near one half") {
  SampledGraph g;
  g.t_start = 0.0;
  g.t_end = 1.0;
  g.values.resize(1 << 16);
  for (size_t i = 0; i < g.points(); ++i)
    g.values[i] = {weierstrass(0.5, 4.0, 40, g.t_at(i)), 0.0};
  auto est = holder_exponent_oscillation(g, 0.3);
  CHECK(std::abs(est.exponent - 0.5) <= 0.1);
}

TEST_CASE("oscillation exponent: degenerate graph flagged") {
  SampledGraph g;
  g.t_start = 0.0;
  g.t_end = 1.0;
  g.values.assign(1 << 12, {3.5, 0.0});
  auto est = holder_exponent_oscillation(g, 0.5);
  CHECK(est.degenerate);
  CHECK(est.exponent == 1.5);
}

TEST_CASE("oscillation exponent: scale validation") {
  auto g = function_graph([](double t) { return t; }, 0.0, 1.0, 64);
  CHECK_THROWS_AS(holder_exponent_oscillation(g, 0.5), Error);
}

TEST_CASE("oscillation estimates decrease as beta grows at fixed alpha") {
  const PrimeTable& t4 = table();
  double prev = 2.0;
  for (double beta : {0.5, 1.0, 1.5, 2.0}) {
    SeriesParams p{1.5, beta, 10000, Component::real_part};
    auto g = sample_graph(p, t4, 0.0, 1.0, (1 << 15) + 1);
    auto est = holder_exponent_oscillation(g, 0.3173);
    CHECK(est.exponent <= prev + 0.1);
    prev = est.exponent;
  }
}

TEST_CASE("holder upper bound report") {
  SeriesParams p{1.2, 2.0, 1300, Component::complex_full};
  std::vector<uint64_t> ms;
  for (uint64_t prime : {101, 151, 211, 307, 401, 503}) {
    uint64_t idx = table().count_upto(prime) - 1;
    CHECK(table().primes[idx] == prime);
    ms.push_back(idx);
  }
  auto rep = holder_upper_bound_check(p, table(), ms, 0.5);
  CHECK(rep.alpha_over_beta == doctest::Approx(0.6));
  CHECK(rep.rows.size() == ms.size());
  for (auto& row : rep.rows) {
    // isolation identity within 5%
    CHECK(row.identity_ratio == doctest::Approx(1.0).epsilon(0.05));
    CHECK(row.theta > 0.0);
  }
  // empirical bound over p in [100, 1000] lands within 0.15 of alpha/beta
  CHECK(rep.min_bound <= rep.alpha_over_beta + 0.15);

  // cross-estimator: oscillation at t0 stays below the bound plus noise band
  SeriesParams pg{1.2, 2.0, 2000, Component::complex_full};
  auto g = sample_graph(pg, table(), 0.0, 1.0, (1 << 15) + 1);
  auto est = holder_exponent_oscillation(g, 0.5);
  CHECK(est.exponent <= rep.min_bound + 0.2);

  SeriesParams bad{0.9, 2.0, 1300, Component::complex_full};
  CHECK_THROWS_AS(holder_upper_bound_check(bad, table(), ms, 0.5), Error);
}
