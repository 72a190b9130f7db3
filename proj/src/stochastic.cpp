#include "primewave/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "primewave/parallel.hpp"

namespace primewave {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double cycles_factor(AngularConvention angular) {
  // sin(omega n x) = sin(2 pi * n * (x * cf)); cf is exact for both cases
  return angular == AngularConvention::pi ? 0.5 : 1.0;
}

void check_family_table(WalkFamily family, uint64_t n_terms,
                        const PrimeTable* table) {
  if (family == WalkFamily::primes || family == WalkFamily::prime_powers) {
    require(table != nullptr, ErrorCode::domain,
            "walk: prime families need a prime table");
    require(table->count() >= n_terms, ErrorCode::insufficient_table,
            "walk: prime table holds fewer primes than n_terms");
  }
}

double sin_cycles(double f) { return std::sin(kTwoPi * f); }

// exact doubling map on cycle units; the phase of sin(2^k pi x) never wraps
// silently
struct DoublingPhase {
  double y;
  explicit DoublingPhase(double xc) { y = wrap_unit(frac_cycles(2.0, xc)); }
  double next() {
    double cur = y;
    y *= 2.0;
    if (y >= 1.0) y -= 1.0;
    return cur;
  }
};

}  // namespace

double uniform_counter(uint64_t seed, uint64_t i) {
  uint64_t z = splitmix64(seed + i * 0x9e3779b97f4a7c15ull);
  return double(z >> 11) * 0x1p-53;
}

std::vector<double> walk(const WalkSpec& spec, const PrimeTable* table) {
  require(spec.n_terms >= 1, ErrorCode::domain, "walk: n_terms must be >= 1");
  check_family_table(spec.family, spec.n_terms, table);
  double xc = spec.x * cycles_factor(spec.angular);

  std::vector<double> sums;
  sums.reserve(spec.n_terms);
  KahanSum acc;
  switch (spec.family) {
    case WalkFamily::powers_of_two: {
      DoublingPhase phase(xc);
      for (uint64_t k = 1; k <= spec.n_terms; ++k) {
        acc.add(sin_cycles(phase.next()));
        sums.push_back(acc.value());
      }
      break;
    }
    case WalkFamily::integers:
      for (uint64_t k = 1; k <= spec.n_terms; ++k) {
        acc.add(sin_cycles(frac_cycles_u64(k, xc)));
        sums.push_back(acc.value());
      }
      break;
    case WalkFamily::primes:
      for (uint64_t k = 0; k < spec.n_terms; ++k) {
        acc.add(sin_cycles(frac_cycles_u64(table->primes[k], xc)));
        sums.push_back(acc.value());
      }
      break;
    case WalkFamily::prime_powers:
      for (uint64_t k = 0; k < spec.n_terms; ++k) {
        double freq = std::pow(double(table->primes[k]), spec.beta);
        acc.add(sin_cycles(frac_cycles(freq, xc)));
        sums.push_back(acc.value());
      }
      break;
  }
  return sums;
}

CltReport clt_experiment(WalkFamily family, double beta, uint64_t n_terms,
                         uint64_t n_samples, CltNormalization normalization,
                         uint64_t seed, AngularConvention angular,
                         const PrimeTable* table) {
  require(n_samples >= 100, ErrorCode::domain,
          "clt_experiment: need at least 100 samples");
  require(n_terms >= 1, ErrorCode::domain,
          "clt_experiment: n_terms must be >= 1");
  check_family_table(family, n_terms, table);

  double cf = cycles_factor(angular);
  std::vector<double> gaps;
  std::vector<double> freqs;
  if (family == WalkFamily::primes) {
    gaps.resize(n_terms);
    for (uint64_t k = 0; k + 1 < n_terms; ++k)
      gaps[k] = double(table->primes[k + 1] - table->primes[k]);
  } else if (family == WalkFamily::prime_powers) {
    freqs.resize(n_terms);
    for (uint64_t k = 0; k < n_terms; ++k)
      freqs[k] = std::pow(double(table->primes[k]), beta);
  }

  auto sample_sum = [&](double x) -> double {
    double xc = x * cf;
    KahanSum acc;
    switch (family) {
      case WalkFamily::powers_of_two: {
        DoublingPhase phase(xc);
        for (uint64_t k = 0; k < n_terms; ++k) acc.add(sin_cycles(phase.next()));
        break;
      }
      case WalkFamily::integers: {
        // rotate exp(2 pi i xc) per unit step instead of a sin call per term,
        // re-anchored periodically to bound the drift
        std::complex<double> step = unit_cycles(wrap_unit(xc - std::floor(xc)));
        std::complex<double> z = step;
        for (uint64_t k = 1; k <= n_terms; ++k) {
          if ((k & 4095) == 0) z = unit_cycles(frac_cycles_u64(k, xc));
          acc.add(z.imag());
          z *= step;
        }
        break;
      }
      case WalkFamily::primes: {
        // one rotation per distinct prime gap
        double rot_c[256], rot_s[256];
        for (int d = 1; d < 256; ++d) {
          auto r = unit_cycles(frac_cycles(double(d), xc));
          rot_c[d] = r.real();
          rot_s[d] = r.imag();
        }
        std::complex<double> z = unit_cycles(frac_cycles_u64(2, xc));
        for (uint64_t k = 0; k < n_terms; ++k) {
          acc.add(z.imag());
          if (k + 1 < n_terms) {
            int d = int(gaps[k]);
            if (d >= 256 || ((k + 1) & 4095) == 0) {
              z = unit_cycles(frac_cycles_u64(table->primes[k + 1], xc));
            } else {
              z = {z.real() * rot_c[d] - z.imag() * rot_s[d],
                   z.real() * rot_s[d] + z.imag() * rot_c[d]};
            }
          }
        }
        break;
      }
      case WalkFamily::prime_powers:
        for (uint64_t k = 0; k < n_terms; ++k)
          acc.add(sin_cycles(frac_cycles(freqs[k], xc)));
        break;
    }
    return acc.value();
  };

  double norm = normalization == CltNormalization::by_n
                    ? 1.0 / double(n_terms)
                    : 1.0 / std::sqrt(double(n_terms));
  std::vector<double> values(n_samples);
  parallel_chunks(n_samples, 64, [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      double x = (uniform_counter(seed, i) - 0.5) * M_PI;  // [-pi/2, pi/2)
      values[i] = sample_sum(x) * norm;
    }
  });

  CltReport rep;
  rep.n_samples = n_samples;
  rep.n_terms = n_terms;
  rep.seed = seed;
  rep.normalization = normalization;

  KahanSum mean_acc;
  for (double v : values) mean_acc.add(v);
  rep.mean = mean_acc.value() / double(n_samples);
  KahanSum m2, m3, m4;
  for (double v : values) {
    double d = v - rep.mean;
    m2.add(d * d);
    m3.add(d * d * d);
    m4.add(d * d * d * d);
  }
  double M = double(n_samples);
  rep.variance = m2.value() / M;
  double sigma = std::sqrt(rep.variance);
  rep.skewness = (sigma > 0.0) ? m3.value() / M / (sigma * sigma * sigma) : 0.0;
  rep.excess_kurtosis =
      (sigma > 0.0) ? m4.value() / M / (rep.variance * rep.variance) - 3.0
                    : 0.0;
  rep.jarque_bera =
      M / 6.0 *
      (rep.skewness * rep.skewness +
       rep.excess_kurtosis * rep.excess_kurtosis / 4.0);

  size_t bins = size_t(std::ceil(std::sqrt(M)));
  double lo = rep.mean - 4.0 * sigma, hi = rep.mean + 4.0 * sigma;
  double width = (hi - lo) / double(bins);
  rep.bin_centers.resize(bins);
  rep.bin_counts.assign(bins, 0);
  for (size_t b = 0; b < bins; ++b)
    rep.bin_centers[b] = lo + (double(b) + 0.5) * width;
  for (double v : values) {
    size_t b;
    if (width <= 0.0) {
      b = bins / 2;
    } else {
      double pos = (v - lo) / width;
      b = pos <= 0.0 ? 0
                     : (pos >= double(bins) ? bins - 1 : size_t(pos));
    }
    rep.bin_counts[b]++;  // out-of-range samples clamp to the edge bins
  }
  return rep;
}

HadamardReport hadamard_check(const std::vector<uint64_t>& sequence,
                              double rho) {
  require(sequence.size() >= 2, ErrorCode::domain,
          "hadamard_check: sequence needs at least two entries");
  for (size_t i = 0; i + 1 < sequence.size(); ++i)
    require(sequence[i + 1] > sequence[i], ErrorCode::domain,
            "hadamard_check: sequence must be strictly increasing");

  HadamardReport rep;
  rep.pass.resize(sequence.size() - 1);
  for (size_t i = 0; i + 1 < sequence.size(); ++i) {
    bool ok =
        double(sequence[i + 1]) / double(sequence[i]) >= 1.0 + rho;
    rep.pass[i] = ok ? 1 : 0;
    if (!ok && rep.all_pass) {
      rep.all_pass = false;
      rep.first_fail = int64_t(i);
    }
  }
  return rep;
}

}  // namespace primewave
