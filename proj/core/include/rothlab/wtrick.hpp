#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rothlab {

// The reduction frame from primes <= N to residues mod Nprime:
// M = primorial(z), Nprime = least prime > ceil(2N/M), b the progression class.
struct WTrickParams {
  std::uint64_t N = 0;
  double z = 0.0;
  std::uint64_t M = 0;
  std::uint64_t Nprime = 0;
  std::optional<std::uint64_t> b;  // in [1, M], coprime to M once chosen

  friend bool operator==(const WTrickParams&, const WTrickParams&) = default;
};

// Image of A ∩ P(b) under n = (m - b) / M, residues in [1, (Nprime-1)/2].
struct ReducedSet {
  WTrickParams params;  // params.b is set
  std::vector<std::uint64_t> residues;  // sorted ascending
};

// z defaults to ln(N)/3 unless overridden; rejects frames with z < 3.
WTrickParams make_params(std::uint64_t N, std::optional<double> z_override = {});

struct ProgressionChoice {
  std::uint64_t b = 0;
  std::uint64_t count = 0;
};

// Picks the residue class b (coprime to M, normalized to [1, M]) maximizing
// |A ∩ P(b)| with P(b) = {b + nM : n >= 1, b + nM <= N}; smallest b wins ties.
// A must be a sorted set of primes <= params.N.
ProgressionChoice choose_progression(const std::vector<std::uint64_t>& A,
                                     const WTrickParams& params);

// Exact per-class counts over all b in [1, M] coprime to M, same clamping.
std::vector<std::pair<std::uint64_t, std::uint64_t>> progression_counts(
    const std::vector<std::uint64_t>& A, const WTrickParams& params);

ReducedSet reduce_to_cyclic(const std::vector<std::uint64_t>& A,
                            const WTrickParams& params, std::uint64_t b);

std::uint64_t euler_phi(std::uint64_t n);

}  // namespace rothlab
