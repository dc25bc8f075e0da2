#include "rothlab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rothlab/errors.hpp"

namespace rothlab {

namespace {

constexpr std::uint64_t kSegmentedThreshold = 10'000'000;
constexpr std::size_t kSegmentSize = 1 << 20;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Flat sieve for sqrt-sized prime seeds.
std::vector<std::uint64_t> small_primes_upto(std::uint64_t limit) {
  std::vector<char> comp(limit + 1, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = 1;
  }
  return out;
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
    : limit_(limit), primes_(std::move(primes)), bits_((limit / 2) / 64 + 1, 0) {
  for (std::uint64_t p : primes_) {
    if (p & 1) bits_[(p / 2) / 64] |= std::uint64_t{1} << ((p / 2) % 64);
  }
}

bool PrimeTable::contains(std::uint64_t n) const {
  if (n > limit_) throw parameter_error("PrimeTable::contains: " + std::to_string(n) +
                                        " exceeds table limit " + std::to_string(limit_));
  if (n == 2) return true;
  if (n < 2 || (n & 1) == 0) return false;
  return (bits_[(n / 2) / 64] >> ((n / 2) % 64)) & 1;
}

PrimeTable sieve_primes(std::uint64_t limit) {
  if (limit < 2) throw parameter_error("sieve_primes: limit must be >= 2");
  if (limit > kSieveCeiling)
    throw capacity_error("sieve_primes: limit " + std::to_string(limit) +
                         " exceeds ceiling " + std::to_string(kSieveCeiling));

  if (limit <= kSegmentedThreshold) {
    // Odd-only flat sieve; index i <-> odd number 2i+1.
    const std::uint64_t half = (limit - 1) / 2;
    std::vector<char> comp(half + 1, 0);
    for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
      if (comp[i]) continue;
      const std::uint64_t p = 2 * i + 1;
      for (std::uint64_t j = (p * p) / 2; j <= half; j += p) comp[j] = 1;
    }
    std::vector<std::uint64_t> primes{2};
    for (std::uint64_t i = 1; i <= half; ++i)
      if (!comp[i]) primes.push_back(2 * i + 1);
    return PrimeTable(limit, std::move(primes));
  }

  // Segmented sieve over odd numbers.
  const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const std::vector<std::uint64_t> seeds = small_primes_upto(root);
  std::vector<std::uint64_t> primes{2};
  std::vector<char> seg(kSegmentSize);
  for (std::uint64_t low = 3; low <= limit; low += 2 * kSegmentSize) {
    const std::uint64_t high = std::min(low + 2 * kSegmentSize - 2, limit | 1);
    const std::size_t len = static_cast<std::size_t>((high - low) / 2 + 1);
    std::fill(seg.begin(), seg.begin() + len, 0);
    for (std::uint64_t p : seeds) {
      if (p == 2) continue;
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, ((low + p - 1) / p) * p);
      if ((start & 1) == 0) start += p;
      for (std::uint64_t j = start; j <= high; j += 2 * p) seg[(j - low) / 2] = 1;
    }
    for (std::size_t i = 0; i < len; ++i) {
      const std::uint64_t n = low + 2 * i;
      if (!seg[i] && n <= limit && n >= 3) primes.push_back(n);
    }
  }
  return PrimeTable(limit, std::move(primes));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Sufficient witness set for the full 64-bit range.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

big_int primorial(double z) {
  if (!(z >= 3.0)) throw parameter_error("primorial: z must be >= 3");
  if (z > 1e8) throw capacity_error("primorial: z too large to sieve");
  const std::uint64_t zi = static_cast<std::uint64_t>(z);
  const PrimeTable table = sieve_primes(zi);
  big_int m = 1;
  for (std::uint64_t p : table.primes()) m *= p;
  return m;
}

std::uint64_t primorial_u64(double z) {
  const big_int m = primorial(z);
  if (m > big_int(std::numeric_limits<std::uint64_t>::max()))
    throw capacity_error("primorial(" + std::to_string(z) + ") does not fit in 64 bits");
  return static_cast<std::uint64_t>(m);
}

std::uint64_t next_prime_above(double x) {
  if (!(x >= 1.0)) throw parameter_error("next_prime_above: x must be >= 1");
  if (x >= 1.8e19) throw capacity_error("next_prime_above: x beyond 64-bit range");
  std::uint64_t n = static_cast<std::uint64_t>(std::floor(x)) + 1;
  if (n <= 2) return 2;
  if ((n & 1) == 0) {
    if (n == 2) return 2;
    ++n;
  }
  while (!is_prime(n)) n += 2;
  return n;
}

std::uint64_t count_primes_in_progression(std::uint64_t b, std::uint64_t M,
                                          std::uint64_t lo, std::uint64_t hi) {
  if (M < 1) throw parameter_error("count_primes_in_progression: M must be >= 1");
  if (lo > hi) throw parameter_error("count_primes_in_progression: lo > hi");
  const std::uint64_t r = b % M;
  const PrimeTable table = sieve_primes(std::max<std::uint64_t>(hi, 2));
  const auto& ps = table.primes();
  auto it = std::lower_bound(ps.begin(), ps.end(), lo);
  std::uint64_t count = 0;
  for (; it != ps.end() && *it <= hi; ++it)
    if (*it % M == r) ++count;
  return count;
}

}  // namespace rothlab
