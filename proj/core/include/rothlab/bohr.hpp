#pragma once

#include <cstdint>
#include <vector>

#include "rothlab/cyclic.hpp"

namespace rothlab {

// Distance of n/N' to the nearest integer, in [0, 1/2].
double fractional_distance(std::uint64_t n, std::uint64_t Nprime);

// B = {n : ||n x|| <= epsilon for all x in the spectrum}. Always contains 0,
// always symmetric under n -> N' - n.
struct BohrSet {
  Spectrum spectrum;
  double epsilon = 0.0;
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> members;  // sorted ascending
};

// Exact O(N' |R|) membership scan; epsilon must lie in (0, 1/4]. The closed
// endpoint keeps every support-confinement argument intact.
// Ties at the threshold resolve toward inclusion.
BohrSet bohr_set(const Spectrum& R, double epsilon, std::uint64_t Nprime);

// N' / ceil(1/eps)^r, the certified lower bound for |B|.
double bohr_pigeonhole_bound(std::uint64_t Nprime, double epsilon, std::size_t r);

// Exact integer check |B| * ceil(1/eps)^r >= N' (saturating arithmetic).
bool bohr_size_certified(std::uint64_t bohr_size, std::uint64_t Nprime,
                         double epsilon, std::size_t r);

// sigma = 1_B / |B| as a dense cyclic function.
struct SmoothingKernel {
  BohrSet bohr;
  CyclicFunction sigma;
};

SmoothingKernel make_kernel(BohrSet bohr);

// a1 = a * sigma (cyclic convolution), evaluated through transforms.
CyclicFunction smooth(const CyclicFunction& a, const SmoothingKernel& kernel);

// O(N' |B|) reference convolution.
CyclicFunction smooth_direct(const CyclicFunction& a, const SmoothingKernel& kernel);

// max over x in R of |1 - sigma_hat(-2x) sigma_hat(x)^2|.
double kernel_deviation(const SmoothingKernel& kernel, const Spectrum& R);

}  // namespace rothlab
