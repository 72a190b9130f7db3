#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "primewave/primes.hpp"

namespace primewave {

enum class Component { complex_full, real_part, imag_part };

// Parameters of a partial sum sum_{p<=n_max} p^-alpha exp(2 pi i p^beta t).
struct SeriesParams {
  double alpha = 1.0;
  double beta = 1.0;
  uint64_t n_max = 2;
  Component component = Component::complex_full;

  void validate() const;
};

// Uniform t-grid with complex samples; the unit every analysis consumes.
// t_i = t_start + i * spacing(), both endpoints included.
struct SampledGraph {
  double t_start = 0.0;
  double t_end = 1.0;
  std::vector<std::complex<double>> values;

  size_t points() const { return values.size(); }
  double spacing() const {
    return (t_end - t_start) / double(points() - 1);
  }
  double t_at(size_t i) const { return t_start + double(i) * spacing(); }
};

// p^beta in cycle units, with exact integer paths for beta = 1 and beta = 2.
double frac_prime_power_cycles(uint64_t p, double beta, double t);
double prime_power(uint64_t p, double beta);

std::complex<double> eval_v(const SeriesParams& params, const PrimeTable& table,
                            double t);

// Samples eval_v on a uniform grid including both endpoints. Grid chunks are
// fixed-size, so the output is identical for any thread count.
SampledGraph sample_graph(const SeriesParams& params, const PrimeTable& table,
                          double t_start, double t_end, size_t points);

// m-th derivative: sum (2 pi i p^beta)^m p^-alpha exp(2 pi i p^beta t).
std::complex<double> eval_v_derivative(const SeriesParams& params,
                                       const PrimeTable& table, double t,
                                       int order);

// Weierstrass partial sum  sum_{n=0}^{terms-1} a^n cos(b^n t).
double weierstrass(double a, double b, int terms, double t);

// Riemann-type partial sum  sum_{n=1}^{terms} n^-alpha cos(n^2 t).
double riemann_series(double alpha, int terms, double t);

}  // namespace primewave
