#include "rothlab/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "chunked.hpp"
#include "rothlab/errors.hpp"

namespace rothlab {

namespace {

using cdbl = std::complex<double>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_same_modulus(std::uint64_t a, std::uint64_t b, const char* where) {
  if (a != b)
    throw input_error(std::string(where) + ": modulus mismatch " + std::to_string(a) +
                      " vs " + std::to_string(b));
}

// In-place radix-2 DIT FFT, length a power of two. Twiddles come from a
// per-index sincos table so rounding does not accumulate across a stage.
void fft_pow2(std::vector<cdbl>& x, bool inverse) {
  const std::size_t n = x.size();
  if (n < 2) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  std::vector<cdbl> tw(n / 2);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double ang = sign * kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    tw[j] = {std::cos(ang), std::sin(ang)};
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cdbl w = tw[j * stride];
        const cdbl u = x[i + j];
        const cdbl v = x[i + j + len / 2] * w;
        x[i + j] = u + v;
        x[i + j + len / 2] = u - v;
      }
    }
  }
}

// e(-n^2 / 2N) with the square reduced mod 2N before it meets a double.
cdbl chirp(std::uint64_t n, std::uint64_t N) {
  const unsigned __int128 sq = static_cast<unsigned __int128>(n) * n;
  const std::uint64_t red = static_cast<std::uint64_t>(sq % (2 * N));
  const double ang = -std::numbers::pi * static_cast<double>(red) / static_cast<double>(N);
  return {std::cos(ang), std::sin(ang)};
}

std::vector<cdbl> bluestein(const std::vector<cdbl>& x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  if (std::has_single_bit(n)) {
    std::vector<cdbl> out = x;
    fft_pow2(out, false);
    return out;
  }
  const std::size_t L = std::bit_ceil(2 * n - 1);
  std::vector<cdbl> a(L, cdbl{}), b(L, cdbl{});
  for (std::size_t i = 0; i < n; ++i) {
    const cdbl c = chirp(i, n);
    a[i] = x[i] * c;
    b[i] = std::conj(c);
    if (i > 0) b[L - i] = std::conj(c);
  }
  fft_pow2(a, false);
  fft_pow2(b, false);
  for (std::size_t i = 0; i < L; ++i) a[i] *= b[i];
  fft_pow2(a, true);
  std::vector<cdbl> out(n);
  const double scale = 1.0 / static_cast<double>(L);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * scale * chirp(k, n);
  return out;
}

std::vector<cdbl> dft_direct_impl(const std::vector<cdbl>& x) {
  const std::uint64_t n = x.size();
  std::vector<cdbl> out(n);
  detail::chunked_for(n, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t k = lo; k < hi; ++k) {
      cdbl acc{};
      for (std::uint64_t j = 0; j < n; ++j) {
        const std::uint64_t red = (j * k) % n;  // keep the angle small and exact
        const double ang = -kTwoPi * static_cast<double>(red) / static_cast<double>(n);
        acc += x[j] * cdbl{std::cos(ang), std::sin(ang)};
      }
      out[k] = acc;
    }
  });
  return out;
}

std::vector<cdbl> to_complex(const std::vector<double>& v) {
  std::vector<cdbl> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = {v[i], 0.0};
  return out;
}

}  // namespace

CyclicFunction CyclicFunction::zeros(std::uint64_t modulus) {
  return {modulus, std::vector<double>(modulus, 0.0)};
}

double CyclicFunction::l1_norm() const {
  double s = 0.0;
  for (double v : values) s += std::abs(v);
  return s;
}

double CyclicFunction::l2_norm_sq() const {
  double s = 0.0;
  for (double v : values) s += v * v;
  return s;
}

ComplexCyclicFunction dft(const CyclicFunction& f) {
  return {f.modulus, bluestein(to_complex(f.values))};
}

ComplexCyclicFunction dft(const ComplexCyclicFunction& f) {
  return {f.modulus, bluestein(f.values)};
}

ComplexCyclicFunction dft_direct(const CyclicFunction& f) {
  return {f.modulus, dft_direct_impl(to_complex(f.values))};
}

ComplexCyclicFunction dft_direct(const ComplexCyclicFunction& f) {
  return {f.modulus, dft_direct_impl(f.values)};
}

ComplexCyclicFunction idft(const ComplexCyclicFunction& fhat) {
  std::vector<cdbl> tmp(fhat.values.size());
  for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] = std::conj(fhat.values[i]);
  tmp = bluestein(tmp);
  const double scale = tmp.empty() ? 1.0 : 1.0 / static_cast<double>(tmp.size());
  for (auto& v : tmp) v = std::conj(v) * scale;
  return {fhat.modulus, std::move(tmp)};
}

double lp_moment(const ComplexCyclicFunction& fhat, double p) {
  if (!(p > 0.0)) throw parameter_error("lp_moment: p must be > 0");
  double s = 0.0;
  for (const auto& v : fhat.values) s += std::pow(std::abs(v), p);
  return s;
}

Spectrum large_spectrum(const ComplexCyclicFunction& fhat, double delta) {
  if (!(delta > 0.0)) throw parameter_error("large_spectrum: delta must be > 0");
  Spectrum out;
  out.delta = delta;
  bool has_one = false;
  for (std::uint64_t x = 0; x < fhat.values.size(); ++x) {
    if (std::abs(fhat.values[x]) >= delta) {
      out.members.push_back(x);
      if (x == 1) has_one = true;
    }
  }
  if (!has_one && fhat.modulus > 1) {
    out.members.push_back(1);
    std::sort(out.members.begin(), out.members.end());
  }
  return out;
}

double triple_sum_direct(const CyclicFunction& f, const CyclicFunction& g,
                         const CyclicFunction& h) {
  require_same_modulus(f.modulus, g.modulus, "triple_sum_direct");
  require_same_modulus(f.modulus, h.modulus, "triple_sum_direct");
  const std::uint64_t n = f.modulus;
  return detail::chunked_sum(n, [&](std::uint64_t lo, std::uint64_t hi) {
    double acc = 0.0;
    for (std::uint64_t n1 = lo; n1 < hi; ++n1) {
      const double fv = f.values[n1];
      // n3 = 2 n2 - n1 mod n; advances by 2 as n2 steps.
      std::uint64_t n3 = (n - n1) % n;
      for (std::uint64_t n2 = 0; n2 < n; ++n2) {
        acc += fv * g.values[n2] * h.values[n3];
        n3 += 2;
        if (n3 >= n) n3 -= n;
      }
    }
    return acc;
  });
}

double triple_sum_fourier(const CyclicFunction& f, const CyclicFunction& g,
                          const CyclicFunction& h) {
  require_same_modulus(f.modulus, g.modulus, "triple_sum_fourier");
  require_same_modulus(f.modulus, h.modulus, "triple_sum_fourier");
  const std::uint64_t n = f.modulus;
  const ComplexCyclicFunction fh = dft(f), gh = dft(g), hh = dft(h);
  cdbl acc{};
  for (std::uint64_t m = 0; m < n; ++m) {
    const std::uint64_t neg = (n - m) % n;
    const std::uint64_t twice = (2 * m) % n;
    acc += fh.values[neg] * gh.values[twice] * hh.values[neg];
  }
  return acc.real() / static_cast<double>(n);
}

Discrepancy delta_discrepancy(const CyclicFunction& a, const CyclicFunction& a1,
                              double rel_tol) {
  require_same_modulus(a.modulus, a1.modulus, "delta_discrepancy");
  const double n = static_cast<double>(a.modulus);
  const double ta_d = triple_sum_direct(a, a, a);
  const double ta1_d = triple_sum_direct(a1, a1, a1);
  const double ta_f = triple_sum_fourier(a, a, a);
  const double ta1_f = triple_sum_fourier(a1, a1, a1);
  Discrepancy d;
  d.direct = n * std::abs(ta_d - ta1_d);
  d.fourier = n * std::abs(ta_f - ta1_f);
  // A discrepancy buried below the triple sums' own rounding noise counts as
  // agreement; otherwise the two routes must match to rel_tol.
  const double noise = rel_tol * n * (std::abs(ta_d) + std::abs(ta1_d) + 1e-300);
  const double denom = std::max(std::abs(d.direct), std::abs(d.fourier));
  if (denom > noise && std::abs(d.direct - d.fourier) > rel_tol * denom)
    throw consistency_error("delta_discrepancy: direct " + std::to_string(d.direct) +
                            " and spectral " + std::to_string(d.fourier) + " disagree");
  return d;
}

SpectrumCertificate spectrum_size_certificate(const ComplexCyclicFunction& fhat,
                                              double delta) {
  SpectrumCertificate c;
  c.r = large_spectrum(fhat, delta).members.size();
  c.bound = 1.0 + std::pow(delta, -2.5) * lp_moment(fhat, 2.5);
  c.holds = static_cast<double>(c.r) <= c.bound;
  return c;
}

HolderChain holder_chain(const ComplexCyclicFunction& fhat) {
  const std::uint64_t n = fhat.values.size();
  HolderChain out;
  for (std::uint64_t m = 0; m < n; ++m) {
    const std::uint64_t idx = (2 * (n - m)) % n;  // -2m mod n
    const double am = std::abs(fhat.values[m]);
    out.lhs += std::abs(fhat.values[idx]) * am * am;
  }
  out.rhs = std::pow(lp_moment(fhat, 2.5), 0.4) * std::pow(lp_moment(fhat, 10.0 / 3.0), 0.6);
  out.holds = out.lhs <= out.rhs * (1.0 + 1e-12);
  return out;
}

}  // namespace rothlab
