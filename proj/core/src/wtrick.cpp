#include "rothlab/wtrick.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rothlab/errors.hpp"
#include "rothlab/primes.hpp"

namespace rothlab {

namespace {

// Normalize m's residue class to [1, M].
std::uint64_t class_of(std::uint64_t m, std::uint64_t M) {
  const std::uint64_t r = m % M;
  return r == 0 ? M : r;
}

void check_input_set(const std::vector<std::uint64_t>& A, std::uint64_t N) {
  if (!std::is_sorted(A.begin(), A.end()))
    throw input_error("input set must be sorted ascending");
  for (std::uint64_t m : A) {
    if (m > N) throw input_error("set element " + std::to_string(m) + " exceeds N");
    if (!is_prime(m)) throw input_error("set element " + std::to_string(m) + " is not prime");
  }
}

}  // namespace

WTrickParams make_params(std::uint64_t N, std::optional<double> z_override) {
  if (N < 100) throw parameter_error("make_params: N must be >= 100");
  const double z = z_override.value_or(std::log(static_cast<double>(N)) / 3.0);
  if (!(z >= 3.0))
    throw parameter_error("make_params: z = " + std::to_string(z) +
                          " < 3; a z override is required at this N");
  WTrickParams p;
  p.N = N;
  p.z = z;
  p.M = primorial_u64(z);
  const std::uint64_t target = (2 * N + p.M - 1) / p.M;  // ceil(2N/M)
  p.Nprime = next_prime_above(static_cast<double>(target));
  if (p.Nprime <= target)  // double rounding guard for huge targets
    throw capacity_error("make_params: next-prime search lost precision");
  return p;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> progression_counts(
    const std::vector<std::uint64_t>& A, const WTrickParams& params) {
  check_input_set(A, params.N);
  const std::uint64_t M = params.M;
  std::vector<std::uint64_t> counts(M + 1, 0);
  for (std::uint64_t m : A) {
    if (m <= M) continue;  // n >= 1 requires m >= b + M
    counts[class_of(m, M)]++;
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t b = 1; b <= M; ++b)
    if (std::gcd(b, M) == 1) out.emplace_back(b, counts[b]);
  return out;
}

ProgressionChoice choose_progression(const std::vector<std::uint64_t>& A,
                                     const WTrickParams& params) {
  if (A.empty()) throw input_error("choose_progression: empty input set");
  ProgressionChoice best;
  bool first = true;
  for (const auto& [b, count] : progression_counts(A, params)) {
    if (first || count > best.count) {
      best = {b, count};
      first = false;
    }
  }
  return best;
}

ReducedSet reduce_to_cyclic(const std::vector<std::uint64_t>& A,
                            const WTrickParams& params, std::uint64_t b) {
  if (b < 1 || b > params.M || std::gcd(b, params.M) != 1)
    throw parameter_error("reduce_to_cyclic: b must lie in [1, M] and be coprime to M");
  check_input_set(A, params.N);
  ReducedSet out;
  out.params = params;
  out.params.b = b;
  const std::uint64_t halfwidth = (params.Nprime - 1) / 2;
  for (std::uint64_t m : A) {
    if (m <= params.M || class_of(m, params.M) != b) continue;
    const std::uint64_t n = (m - b) / params.M;
    if (n < 1 || n > halfwidth)
      throw consistency_error("reduce_to_cyclic: residue " + std::to_string(n) +
                              " outside [1, (N'-1)/2]; Nprime mis-sized");
    out.residues.push_back(n);
  }
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace rothlab
