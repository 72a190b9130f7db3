#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "primewave/common.hpp"

namespace primewave {

// All primes <= limit, ascending. Immutable once built, safe to share across
// threads.
struct PrimeTable {
  uint64_t limit = 0;
  std::vector<uint64_t> primes;

  uint64_t count() const { return primes.size(); }
  // number of primes <= n
  uint64_t count_upto(uint64_t n) const;
  bool contains(uint64_t p) const;
};

// Segmented sieve of Eratosthenes. limit >= 2.
PrimeTable sieve(uint64_t limit);

// Consecutive differences p_{k+1} - p_k; needs at least two primes.
std::vector<uint64_t> prime_gaps(const PrimeTable& table);

// Partition of the table's primes by residue mod q (q prime, q <= limit).
// Class 0 holds q itself.
std::map<uint64_t, std::vector<uint64_t>> residue_classes(
    const PrimeTable& table, uint64_t q);

}  // namespace primewave
