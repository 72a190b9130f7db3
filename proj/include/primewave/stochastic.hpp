#pragma once

#include <cstdint>
#include <vector>

#include "primewave/primes.hpp"

namespace primewave {

enum class WalkFamily { powers_of_two, integers, primes, prime_powers };
enum class AngularConvention { pi, two_pi };
enum class CltNormalization { by_n, by_sqrt_n };

// Partial-sum walk S(x,k) = sum_{j<=k} sin(omega * n_j * x) over a frequency
// family. powers_of_two frequencies are reduced through the exact binary
// doubling map, so no term ever overflows; a double's finite mantissa makes
// that orbit eventually hit zero, which is documented behavior rather than a
// silent wrap.
struct WalkSpec {
  WalkFamily family = WalkFamily::primes;
  double beta = 1.0;  // exponent for prime_powers
  uint64_t n_terms = 1;
  double x = 0.0;
  AngularConvention angular = AngularConvention::pi;
};

std::vector<double> walk(const WalkSpec& spec, const PrimeTable* table);

struct CltReport {
  uint64_t n_samples = 0;
  uint64_t n_terms = 0;
  uint64_t seed = 0;
  CltNormalization normalization = CltNormalization::by_n;
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double jarque_bera = 0.0;
  std::vector<double> bin_centers;
  std::vector<uint64_t> bin_counts;
};

// Monte-Carlo normality experiment: n_samples uniform x in [-pi/2, pi/2]
// drawn from a counter-based generator (reproducible for any thread count),
// normalized sums, ceil(sqrt(M)) histogram bins over mean +/- 4 sigma with
// clamped edges, and the Jarque-Bera statistic (M/6)(skew^2 + exkurt^2/4).
CltReport clt_experiment(WalkFamily family, double beta, uint64_t n_terms,
                         uint64_t n_samples, CltNormalization normalization,
                         uint64_t seed, AngularConvention angular,
                         const PrimeTable* table);

struct HadamardReport {
  std::vector<uint8_t> pass;  // pass[k]: n_{k+1}/n_k >= 1 + rho
  bool all_pass = true;
  int64_t first_fail = -1;
};

// Flags every index violating the gap growth condition n_{k+1}/n_k >= 1+rho.
HadamardReport hadamard_check(const std::vector<uint64_t>& sequence,
                              double rho);

// Counter-based uniform generator: value i of stream `seed`, in [0,1).
double uniform_counter(uint64_t seed, uint64_t i);

}  // namespace primewave
