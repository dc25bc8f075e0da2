#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace rothlab {

// Real-valued function on Z/N'Z, stored dense.
struct CyclicFunction {
  std::uint64_t modulus = 0;
  std::vector<double> values;

  static CyclicFunction zeros(std::uint64_t modulus);
  double l1_norm() const;
  double l2_norm_sq() const;
};

// Complex-valued function on Z/N'Z (typically a Fourier transform).
struct ComplexCyclicFunction {
  std::uint64_t modulus = 0;
  std::vector<std::complex<double>> values;
};

// Frequencies where |fhat| >= delta, plus the always-present frequency 1.
struct Spectrum {
  double delta = 0.0;
  std::vector<std::uint64_t> members;  // sorted ascending, contains 1
};

// fhat(b) = sum_n f(n) e(-2 pi i n b / N'), no prefactor.
// Chirp (Bluestein) evaluation, valid at any length including primes.
ComplexCyclicFunction dft(const CyclicFunction& f);
ComplexCyclicFunction dft(const ComplexCyclicFunction& f);

// O(N'^2) reference evaluator; the normative oracle for lengths <= 4096.
ComplexCyclicFunction dft_direct(const CyclicFunction& f);
ComplexCyclicFunction dft_direct(const ComplexCyclicFunction& f);

// Inverse of dft: f(n) = (1/N') sum_b fhat(b) e(+2 pi i n b / N').
ComplexCyclicFunction idft(const ComplexCyclicFunction& fhat);

// sum_m |fhat(m)|^p, p > 0.
double lp_moment(const ComplexCyclicFunction& fhat, double p);

Spectrum large_spectrum(const ComplexCyclicFunction& fhat, double delta);

// sum over n1 + n3 == 2 n2 (mod N') of f(n1) g(n2) h(n3), by the literal
// double loop over (n1, n2) with n3 determined.
double triple_sum_direct(const CyclicFunction& f, const CyclicFunction& g,
                         const CyclicFunction& h);

// Same functional via (1/N') sum_m fhat(-m) ghat(2m) hhat(-m).
double triple_sum_fourier(const CyclicFunction& f, const CyclicFunction& g,
                          const CyclicFunction& h);

struct Discrepancy {
  double direct = 0.0;   // N' |T(a) - T(a1)| with both T by triple_sum_direct
  double fourier = 0.0;  // same via the spectral route
};

// Both routes; throws consistency_error if they disagree beyond rel_tol.
Discrepancy delta_discrepancy(const CyclicFunction& a, const CyclicFunction& a1,
                              double rel_tol = 1e-6);

struct SpectrumCertificate {
  std::uint64_t r = 0;   // |large_spectrum|
  double bound = 0.0;    // 1 + delta^{-5/2} * sum |fhat|^{5/2}
  bool holds = false;    // r <= bound
};

SpectrumCertificate spectrum_size_certificate(const ComplexCyclicFunction& fhat,
                                              double delta);

// Numerical check of sum_m |fhat(-2m) fhat(m)^2| against the split-exponent
// bound (sum |fhat|^{5/2})^{2/5} (sum |fhat|^{10/3})^{3/5}.
struct HolderChain {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

HolderChain holder_chain(const ComplexCyclicFunction& fhat);

}  // namespace rothlab
