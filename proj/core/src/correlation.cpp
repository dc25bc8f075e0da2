#include "rothlab/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "chunked.hpp"
#include "rothlab/errors.hpp"
#include "rothlab/primes.hpp"

namespace rothlab {

double LiftedFunction::sum() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

double LiftedFunction::l2_norm_sq() const {
  double s = 0.0;
  for (double v : values) s += v * v;
  return s;
}

LiftedFunction lift(const CyclicFunction& f) {
  const std::uint64_t n = f.modulus;
  if (n % 2 == 0) throw parameter_error("lift: modulus must be odd");
  const std::int64_t half = static_cast<std::int64_t>((n - 1) / 2);
  LiftedFunction out;
  out.lo = -half;
  out.values.resize(n);
  for (std::int64_t k = -half; k <= half; ++k) {
    const std::uint64_t res = static_cast<std::uint64_t>((k % static_cast<std::int64_t>(n) +
                                                          static_cast<std::int64_t>(n))) %
                              n;
    out.values[static_cast<std::size_t>(k + half)] = f.values[res];
  }
  return out;
}

std::uint64_t PrimeMajorant::support_size() const {
  std::uint64_t c = 0;
  for (auto f : prime_flag) c += f;
  return c;
}

LiftedFunction PrimeMajorant::as_lifted() const {
  LiftedFunction out;
  out.lo = 1;
  out.values.resize(prime_flag.size());
  for (std::size_t i = 0; i < prime_flag.size(); ++i)
    out.values[i] = prime_flag[i] ? scale : 0.0;
  return out;
}

PrimeMajorant prime_majorant(const WTrickParams& params, std::uint64_t b) {
  if (b < 1 || b > params.M || std::gcd(b, params.M) != 1)
    throw parameter_error("prime_majorant: b must lie in [1, M] and be coprime to M");
  PrimeMajorant out;
  out.params = params;
  out.params.b = b;
  out.b = b;
  out.scale = std::log(static_cast<double>(params.N)) /
              (static_cast<double>(params.Nprime) * std::log(params.z));
  out.prime_flag.resize(params.Nprime);
  const std::uint64_t top = b + params.Nprime * params.M;
  const PrimeTable table = sieve_primes(top);
  for (std::uint64_t n = 1; n <= params.Nprime; ++n)
    out.prime_flag[n - 1] = table.contains(b + n * params.M) ? 1 : 0;
  return out;
}

double pair_correlation(const PrimeMajorant& lambda, std::int64_t m1, std::int64_t m2) {
  // Only the gap matters: sum_n f(n+m1) f(n+m2) is shift-invariant on Z.
  const std::int64_t d = m2 - m1;
  const std::int64_t n = static_cast<std::int64_t>(lambda.prime_flag.size());
  const std::int64_t lo = std::max<std::int64_t>(1, 1 - d);
  const std::int64_t hi = std::min<std::int64_t>(n, n - d);
  std::uint64_t count = 0;
  for (std::int64_t t = lo; t <= hi; ++t)
    count += lambda.prime_flag[static_cast<std::size_t>(t - 1)] &
             lambda.prime_flag[static_cast<std::size_t>(t + d - 1)];
  return lambda.scale * lambda.scale * static_cast<double>(count);
}

int local_density_rho(std::uint64_t p, std::int64_t diff, const WTrickParams& params) {
  if (!is_prime(p)) throw parameter_error("local_density_rho: p must be prime");
  if (static_cast<double>(p) <= params.z) return 0;  // p | M
  const std::uint64_t ad = static_cast<std::uint64_t>(diff < 0 ? -diff : diff);
  return (ad % p == 0) ? 1 : 2;
}

double pair_correlation_bound(std::int64_t m1, std::int64_t m2,
                              const WTrickParams& params) {
  if (m1 == m2)
    return std::log(static_cast<double>(params.N)) /
           (static_cast<double>(params.Nprime) * std::log(params.z));
  return prime_factor_product(m1 - m2, params.z, params.Nprime) /
         static_cast<double>(params.Nprime);
}

double prime_factor_product(std::int64_t m, double z, std::uint64_t Nprime) {
  if (m == 0) throw input_error("prime_factor_product: m must be nonzero");
  std::uint64_t a = static_cast<std::uint64_t>(m < 0 ? -m : m);
  if (a > Nprime) throw parameter_error("prime_factor_product: |m| exceeds N'");
  double prod = 1.0;
  for (std::uint64_t p = 2; p * p <= a; ++p) {
    if (a % p) continue;
    while (a % p == 0) a /= p;
    if (static_cast<double>(p) > z)
      prod *= static_cast<double>(p) / static_cast<double>(p - 1);
  }
  if (a > 1 && static_cast<double>(a) > z)
    prod *= static_cast<double>(a) / static_cast<double>(a - 1);
  return prod;
}

double prime_factor_product_cap(double z, std::uint64_t Nprime) {
  return std::pow(z / (z - 1.0),
                  std::log(static_cast<double>(Nprime)) / std::log(z));
}

LiftedKernel lift_kernel(const SmoothingKernel& kernel) {
  LiftedKernel out;
  const std::int64_t n = static_cast<std::int64_t>(kernel.sigma.modulus);
  const std::int64_t half = (n - 1) / 2;
  for (std::uint64_t m : kernel.bohr.members) {
    std::int64_t v = static_cast<std::int64_t>(m);
    if (v > half) v -= n;
    out.support.push_back(v);
  }
  std::sort(out.support.begin(), out.support.end());
  out.weight = 1.0 / static_cast<double>(kernel.bohr.members.size());
  return out;
}

LiftedFunction convolve_lifted(const LiftedFunction& f, const LiftedKernel& kernel) {
  if (kernel.support.empty()) return {};
  LiftedFunction out;
  out.lo = f.lo + kernel.support.front();
  const std::int64_t out_hi = f.hi() + kernel.support.back();
  const std::uint64_t len = static_cast<std::uint64_t>(out_hi - out.lo + 1);
  out.values.assign(len, 0.0);
  detail::chunked_for(len, [&](std::uint64_t lo_i, std::uint64_t hi_i) {
    for (std::uint64_t i = lo_i; i < hi_i; ++i) {
      const std::int64_t n = out.lo + static_cast<std::int64_t>(i);
      double acc = 0.0;
      for (std::int64_t m : kernel.support) acc += f.at(n - m);
      out.values[i] = acc * kernel.weight;
    }
  });
  return out;
}

L2Certificate l2_certificate(const CyclicFunction& a, const CyclicFunction& a1,
                             const PrimeMajorant& lambda, const SmoothingKernel& kernel,
                             double rel_tol) {
  const std::uint64_t n = lambda.params.Nprime;
  if (a.modulus != n || a1.modulus != n || kernel.sigma.modulus != n)
    throw input_error("l2_certificate: inputs come from different frames");
  const LiftedKernel sk = lift_kernel(kernel);
  L2Certificate cert;
  cert.lhs = std::sqrt(a1.l2_norm_sq());
  cert.mid = std::sqrt(convolve_lifted(lift(a), sk).l2_norm_sq());
  cert.rhs = std::sqrt(convolve_lifted(lambda.as_lifted(), sk).l2_norm_sq());
  cert.rhs_sq_times_Nprime = cert.rhs * cert.rhs * static_cast<double>(n);
  cert.lhs_equals_mid =
      std::abs(cert.lhs - cert.mid) <= rel_tol * std::max({cert.lhs, cert.mid, 1e-300});
  cert.mid_le_rhs = cert.mid <= cert.rhs + rel_tol;
  return cert;
}

std::vector<PairSample> sample_pair_correlations(const PrimeMajorant& lambda,
                                                 const LiftedKernel& kernel,
                                                 std::uint64_t samples,
                                                 std::uint64_t seed) {
  std::vector<PairSample> out;
  const std::uint64_t k = kernel.support.size();
  if (k < 2) return out;
  auto push = [&](std::int64_t m1, std::int64_t m2) {
    PairSample s;
    s.m1 = m1;
    s.m2 = m2;
    s.exact = pair_correlation(lambda, m1, m2);
    s.bound = pair_correlation_bound(m1, m2, lambda.params);
    s.ratio = s.exact / s.bound;
    out.push_back(s);
  };
  if (k * k <= samples + k) {
    for (std::uint64_t i = 0; i < k; ++i)
      for (std::uint64_t j = 0; j < k; ++j)
        if (i != j) push(kernel.support[i], kernel.support[j]);
  } else {
    std::mt19937_64 rng(seed);
    while (out.size() < samples) {
      const std::uint64_t i = rng() % k;
      const std::uint64_t j = rng() % k;
      if (i != j) push(kernel.support[i], kernel.support[j]);
    }
  }
  return out;
}

ExpansionCheck quadratic_expansion_check(const PrimeMajorant& lambda,
                                         const SmoothingKernel& kernel,
                                         double rel_tol) {
  const LiftedKernel sk = lift_kernel(kernel);
  ExpansionCheck out;
  out.convolution_side = convolve_lifted(lambda.as_lifted(), sk).l2_norm_sq();
  double acc = 0.0;
  for (std::int64_t m1 : sk.support)
    for (std::int64_t m2 : sk.support) acc += pair_correlation(lambda, m1, m2);
  out.correlation_side = acc * sk.weight * sk.weight;
  out.agree = std::abs(out.convolution_side - out.correlation_side) <=
              rel_tol * std::max({out.convolution_side, out.correlation_side, 1e-300});
  return out;
}

}  // namespace rothlab
