#pragma once

#include <cstdint>
#include <vector>

#include "rothlab/bohr.hpp"
#include "rothlab/cyclic.hpp"
#include "rothlab/wtrick.hpp"

namespace rothlab {

// Function on Z supported on [lo, lo + values.size()).
struct LiftedFunction {
  std::int64_t lo = 0;
  std::vector<double> values;

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(values.size()) - 1; }
  double at(std::int64_t n) const {
    const std::int64_t i = n - lo;
    if (i < 0 || i >= static_cast<std::int64_t>(values.size())) return 0.0;
    return values[static_cast<std::size_t>(i)];
  }
  double sum() const;
  double l2_norm_sq() const;
};

// f lifted to the centered window [-(N'-1)/2, (N'-1)/2].
LiftedFunction lift(const CyclicFunction& f);

// lambda(n) = scale for n in [1, N'] with b + nM prime, else 0.
struct PrimeMajorant {
  WTrickParams params;
  std::uint64_t b = 0;
  double scale = 0.0;
  std::vector<std::uint8_t> prime_flag;  // index n-1 for n in [1, N']

  std::uint64_t support_size() const;
  LiftedFunction as_lifted() const;
};

PrimeMajorant prime_majorant(const WTrickParams& params, std::uint64_t b);

// sum_n lambda(n + m1) lambda(n + m2) over the integers, exact.
double pair_correlation(const PrimeMajorant& lambda, std::int64_t m1, std::int64_t m2);

// Local root count of (b + xM)(b + (x + diff)M) mod p: 0, 1, or 2.
int local_density_rho(std::uint64_t p, std::int64_t diff, const WTrickParams& params);

// The sieve-shaped comparison value, no implied constant:
// diagonal log N / (N' log z); off-diagonal (1/N') prod_{p | m1-m2, p > z} p/(p-1).
double pair_correlation_bound(std::int64_t m1, std::int64_t m2,
                              const WTrickParams& params);

// prod over prime factors p > z of |m|, of p/(p-1). 0 < |m| <= N'.
double prime_factor_product(std::int64_t m, double z, std::uint64_t Nprime);

// (z/(z-1))^{ln N' / ln z}, the cap prime_factor_product must respect.
double prime_factor_product_cap(double z, std::uint64_t Nprime);

// Sparse kernel on Z: the lifted Bohr set with uniform weight 1/|B|.
struct LiftedKernel {
  std::vector<std::int64_t> support;  // sorted ascending
  double weight = 0.0;
};

LiftedKernel lift_kernel(const SmoothingKernel& kernel);

// f * sigma~ on Z by direct summation over the kernel support.
LiftedFunction convolve_lifted(const LiftedFunction& f, const LiftedKernel& kernel);

struct L2Certificate {
  double lhs = 0.0;  // ||a1||_2, cyclic
  double mid = 0.0;  // ||a~ * sigma~||_2, integer-side convolution
  double rhs = 0.0;  // ||lambda * sigma~||_2
  double rhs_sq_times_Nprime = 0.0;
  bool lhs_equals_mid = false;
  bool mid_le_rhs = false;
};

// The domination chain ||a1||_2 = ||a~ * sigma~||_2 <= ||lambda * sigma~||_2.
// a is the unsmoothed indicator, a1 its cyclic smoothing; all four inputs must
// come from the same (params, b) frame.
L2Certificate l2_certificate(const CyclicFunction& a, const CyclicFunction& a1,
                             const PrimeMajorant& lambda, const SmoothingKernel& kernel,
                             double rel_tol = 1e-9);

struct PairSample {
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  double exact = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};

// Off-diagonal (m1, m2) pairs drawn from the kernel support: all of them when
// few enough, otherwise `samples` seeded draws.
std::vector<PairSample> sample_pair_correlations(const PrimeMajorant& lambda,
                                                 const LiftedKernel& kernel,
                                                 std::uint64_t samples,
                                                 std::uint64_t seed);

// Both sides of the quadratic expansion
// sum_n |sigma~ * lambda(n)|^2 = sum_{m1,m2} sigma~(m1) sigma~(m2) paircorr(m1,m2).
struct ExpansionCheck {
  double convolution_side = 0.0;
  double correlation_side = 0.0;
  bool agree = false;
};

ExpansionCheck quadratic_expansion_check(const PrimeMajorant& lambda,
                                         const SmoothingKernel& kernel,
                                         double rel_tol = 1e-9);

}  // namespace rothlab
