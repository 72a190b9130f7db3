#pragma once

#include <cstdint>
#include <vector>

#include "primewave/primes.hpp"
#include "primewave/series.hpp"

namespace primewave {

// Reciprocal prime sums split by residue class mod q: sums[l] holds
// R_{l,q} = sum of 1/p over primes p <= n with p = l (mod q).
struct ResidueDecomposition {
  uint64_t q = 0;
  uint64_t n = 0;
  std::vector<double> sums;
  double predicted = 0.0;  // class-free prediction (ln ln n + M)/(q-1)
};

ResidueDecomposition residue_sums(const PrimeTable& table, uint64_t q,
                                  uint64_t n);

// V_{1,1}(n, 1/q).real computed two ways: directly and through the
// residue-class / roots-of-unity identity. The two routes must agree to 1e-8.
struct ReciprocalValue {
  double direct = 0.0;
  double residue_route = 0.0;
};

ReciprocalValue value_at_reciprocal(const PrimeTable& table, uint64_t q,
                                    uint64_t n);

struct AffineResidualReport {
  uint64_t q = 0;
  uint64_t n = 0;
  uint64_t points = 0;
  double rms = 0.0;
  double max_abs = 0.0;
  double value_range = 0.0;     // range of the V(n, t/q) samples
  double normalized_rms = 0.0;  // rms / value_range
};

// Residual statistics of lhs_i - (rhs_i/(1-q) + 1/q) for given sample arrays.
AffineResidualReport affine_residual_stats(const std::vector<double>& lhs,
                                           const std::vector<double>& rhs,
                                           uint64_t q);

// Samples V_{1,1}(n, t/q) against the affine image of V_{1,1}(n, t) on a
// uniform grid over [0,1) and reports the residual. The relation is only an
// asymptotic similarity; nothing is asserted here beyond finiteness.
AffineResidualReport affine_similarity_residual(const PrimeTable& table,
                                                uint64_t q, uint64_t n,
                                                uint64_t points);

}  // namespace primewave
