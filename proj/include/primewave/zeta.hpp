#pragma once

#include <cstdint>

#include "primewave/primes.hpp"

namespace primewave {

enum class ZetaMethod { direct_sum, moebius_formula, asymptotic };

struct ZetaEvaluation {
  double value = 0.0;
  uint64_t truncation_bound = 0;
  double tail_estimate = 0.0;
  ZetaMethod method = ZetaMethod::direct_sum;
};

// Riemann zeta for real s > 1, Euler-Maclaurin summed; |err| < 1e-12.
double riemann_zeta(double s);

// zeta(s) - 1 without the loss of the leading 1; used where log(zeta) must
// stay accurate for large s.
double riemann_zeta_minus_1(double s);

// Moebius function by trial-division factorization.
int moebius(uint64_t n);

// log of the truncated Euler product zeta(N,s) = zeta(s) * prod_{p<=N}(1-p^-s).
// Equals sum_{p>N} sum_k p^(-ks)/k, so it is positive and decreasing in N.
double log_zeta_euler_tail(const PrimeTable& table, uint64_t N, double s);

// Prime zeta P(alpha) = sum over primes of p^-alpha, alpha > 1: partial sum
// over the table plus the Moebius-inverted tail sum_n mu(n)/n log zeta(N, alpha n).
ZetaEvaluation prime_zeta(double alpha, const PrimeTable& table);

// Logarithmic integral li(x), x > 1. Adaptive Gauss-Legendre on [2,x] plus
// the li(2) constant; principal value at t=1 is folded into that constant.
double log_integral(double x);

// Exact sum_{p<=N} p^-alpha by compensated direct summation; any real alpha.
double partial_prime_power_sum(double alpha, const PrimeTable& table,
                               uint64_t N);

// Mertens constant M = lim (sum_{p<=n} 1/p - ln ln n) = 0.26149721...
double mertens_constant();

}  // namespace primewave
