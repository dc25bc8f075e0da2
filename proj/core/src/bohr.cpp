#include "rothlab/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chunked.hpp"
#include "rothlab/errors.hpp"

namespace rothlab {

double fractional_distance(std::uint64_t n, std::uint64_t Nprime) {
  const std::uint64_t r = n % Nprime;
  return static_cast<double>(std::min(r, Nprime - r)) / static_cast<double>(Nprime);
}

BohrSet bohr_set(const Spectrum& R, double epsilon, std::uint64_t Nprime) {
  if (!(epsilon > 0.0 && epsilon <= 0.25))
    throw parameter_error("bohr_set: epsilon must lie in (0, 1/4]");
  BohrSet out;
  out.spectrum = R;
  out.epsilon = epsilon;
  out.modulus = Nprime;
  // ||n x|| <= eps  <=>  min(nx mod N', N' - nx mod N') <= eps N'.
  const double threshold = epsilon * static_cast<double>(Nprime);
  std::vector<std::vector<std::uint64_t>> found(detail::kChunks);
  detail::chunked_for_indexed(Nprime, [&](std::size_t chunk, std::uint64_t lo,
                                          std::uint64_t hi) {
    auto& sink = found[chunk];
    for (std::uint64_t n = lo; n < hi; ++n) {
      bool in = true;
      for (std::uint64_t x : R.members) {
        const std::uint64_t r = (n * (x % Nprime)) % Nprime;
        if (static_cast<double>(std::min(r, Nprime - r)) > threshold) {
          in = false;
          break;
        }
      }
      if (in) sink.push_back(n);
    }
  });
  for (auto& part : found)
    out.members.insert(out.members.end(), part.begin(), part.end());
  std::sort(out.members.begin(), out.members.end());
  return out;
}

double bohr_pigeonhole_bound(std::uint64_t Nprime, double epsilon, std::size_t r) {
  const double k = std::ceil(1.0 / epsilon);
  return static_cast<double>(Nprime) / std::pow(k, static_cast<double>(r));
}

bool bohr_size_certified(std::uint64_t bohr_size, std::uint64_t Nprime,
                         double epsilon, std::size_t r) {
  const std::uint64_t k = static_cast<std::uint64_t>(std::ceil(1.0 / epsilon));
  unsigned __int128 pow = 1;
  for (std::size_t i = 0; i < r; ++i) {
    pow *= k;
    if (pow > (static_cast<unsigned __int128>(1) << 100)) return bohr_size >= 1;
  }
  return static_cast<unsigned __int128>(bohr_size) * pow >=
         static_cast<unsigned __int128>(Nprime);
}

SmoothingKernel make_kernel(BohrSet bohr) {
  SmoothingKernel k;
  k.sigma = CyclicFunction::zeros(bohr.modulus);
  const double w = 1.0 / static_cast<double>(bohr.members.size());
  for (std::uint64_t n : bohr.members) k.sigma.values[n] = w;
  k.bohr = std::move(bohr);
  return k;
}

CyclicFunction smooth(const CyclicFunction& a, const SmoothingKernel& kernel) {
  if (a.modulus != kernel.sigma.modulus)
    throw input_error("smooth: modulus mismatch");
  const ComplexCyclicFunction ah = dft(a);
  const ComplexCyclicFunction sh = dft(kernel.sigma);
  ComplexCyclicFunction prod{a.modulus, {}};
  prod.values.resize(a.modulus);
  for (std::uint64_t m = 0; m < a.modulus; ++m)
    prod.values[m] = ah.values[m] * sh.values[m];
  const ComplexCyclicFunction conv = idft(prod);
  CyclicFunction out = CyclicFunction::zeros(a.modulus);
  double peak = 0.0;
  for (double v : a.values) peak = std::max(peak, std::abs(v));
  for (std::uint64_t n = 0; n < a.modulus; ++n) {
    double v = conv.values[n].real();
    if (v < 0.0) {
      if (v < -1e-9 * std::max(peak, 1.0))
        throw consistency_error("smooth: convolution went negative beyond noise");
      v = 0.0;  // transform noise on a nonnegative input
    }
    out.values[n] = v;
  }
  return out;
}

CyclicFunction smooth_direct(const CyclicFunction& a, const SmoothingKernel& kernel) {
  if (a.modulus != kernel.sigma.modulus)
    throw input_error("smooth_direct: modulus mismatch");
  const std::uint64_t n = a.modulus;
  CyclicFunction out = CyclicFunction::zeros(n);
  const double w = 1.0 / static_cast<double>(kernel.bohr.members.size());
  detail::chunked_for(n, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      double acc = 0.0;
      for (std::uint64_t m : kernel.bohr.members) {
        const std::uint64_t j = (i + n - m) % n;
        acc += a.values[j];
      }
      out.values[i] = acc * w;
    }
  });
  return out;
}

double kernel_deviation(const SmoothingKernel& kernel, const Spectrum& R) {
  const std::uint64_t n = kernel.sigma.modulus;
  const ComplexCyclicFunction sh = dft(kernel.sigma);
  double worst = 0.0;
  for (std::uint64_t x : R.members) {
    const std::uint64_t xm = x % n;
    const std::uint64_t neg2 = (2 * (n - xm)) % n;
    const std::complex<double> s = sh.values[xm];
    const double dev = std::abs(1.0 - sh.values[neg2] * s * s);
    worst = std::max(worst, dev);
  }
  return worst;
}

}  // namespace rothlab
