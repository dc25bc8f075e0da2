#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rothlab {

using big_int = boost::multiprecision::cpp_int;

// All primes up to a fixed limit, with O(1) membership lookup.
class PrimeTable {
 public:
  PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes);

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::size_t count() const { return primes_.size(); }

  // Membership predicate on [0, limit].
  bool contains(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint64_t> bits_;  // one bit per odd number
};

// Largest limit sieve_primes accepts.
inline constexpr std::uint64_t kSieveCeiling = 1'000'000'000;

// Complete prime table up to limit. Segmented above ten million so the
// working set stays near one bit per candidate.
PrimeTable sieve_primes(std::uint64_t limit);

// Deterministic Miller-Rabin, exact on the full 64-bit range.
bool is_prime(std::uint64_t n);

// M = product of all primes p <= z, exact. Requires z >= 3.
big_int primorial(double z);

// Narrows primorial(z) to u64; capacity_error if it does not fit.
std::uint64_t primorial_u64(double z);

// Smallest prime strictly greater than x (x >= 1).
std::uint64_t next_prime_above(double x);

// Exact count of primes q in [lo, hi] with q == b (mod M). M >= 1, lo <= hi.
std::uint64_t count_primes_in_progression(std::uint64_t b, std::uint64_t M,
                                          std::uint64_t lo, std::uint64_t hi);

}  // namespace rothlab
