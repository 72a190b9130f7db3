#include "primewave/primes.hpp"

#include <algorithm>
#include <cmath>

namespace primewave {

namespace {

constexpr uint64_t kSegmentSize = uint64_t(1) << 20;

uint64_t integer_sqrt(uint64_t n) {
  uint64_t r = uint64_t(std::sqrt(double(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

uint64_t PrimeTable::count_upto(uint64_t n) const {
  auto it = std::upper_bound(primes.begin(), primes.end(), n);
  return uint64_t(it - primes.begin());
}

bool PrimeTable::contains(uint64_t p) const {
  return std::binary_search(primes.begin(), primes.end(), p);
}

PrimeTable sieve(uint64_t limit) {
  require(limit >= 2, ErrorCode::domain, "sieve: limit must be >= 2");

  PrimeTable table;
  table.limit = limit;
  // reserve using x/(ln x - 1.1), a slight overestimate of pi(x)
  double lx = std::log(double(limit));
  table.primes.reserve(size_t(double(limit) / std::max(1.0, lx - 1.1)) + 16);

  uint64_t root = integer_sqrt(limit);
  std::vector<uint8_t> small(root + 1, 1);
  for (uint64_t i = 2; i * i <= root; ++i)
    if (small[i])
      for (uint64_t j = i * i; j <= root; j += i) small[j] = 0;

  std::vector<uint64_t> base;      // sieving primes <= sqrt(limit)
  std::vector<uint64_t> next;      // next multiple offset per sieving prime
  std::vector<uint8_t> seg(std::min(kSegmentSize, limit + 1));

  uint64_t s = 2;
  for (uint64_t low = 0; low <= limit; low += kSegmentSize) {
    uint64_t high = std::min(low + kSegmentSize - 1, limit);
    std::fill(seg.begin(), seg.begin() + (high - low + 1), uint8_t(1));

    for (; s * s <= high; ++s) {
      if (small[s]) {
        base.push_back(s);
        next.push_back(s * s - low);
      }
    }
    for (size_t i = 0; i < base.size(); ++i) {
      uint64_t j = next[i];
      for (; j <= high - low; j += base[i]) seg[j] = 0;
      next[i] = j - (high - low + 1);
    }
    uint64_t start = std::max<uint64_t>(low, 2);
    for (uint64_t v = start; v <= high; ++v)
      if (seg[v - low]) table.primes.push_back(v);
  }
  return table;
}

std::vector<uint64_t> prime_gaps(const PrimeTable& table) {
  require(table.count() >= 2, ErrorCode::domain,
          "prime_gaps: need at least two primes");
  std::vector<uint64_t> gaps(table.count() - 1);
  for (size_t i = 0; i + 1 < table.primes.size(); ++i)
    gaps[i] = table.primes[i + 1] - table.primes[i];
  return gaps;
}

std::map<uint64_t, std::vector<uint64_t>> residue_classes(
    const PrimeTable& table, uint64_t q) {
  require(q <= table.limit && table.contains(q), ErrorCode::domain,
          "residue_classes: q must be a prime within the table");
  std::map<uint64_t, std::vector<uint64_t>> classes;
  for (uint64_t p : table.primes) classes[p % q].push_back(p);
  return classes;
}

}  // namespace primewave
