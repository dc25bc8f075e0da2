#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rothlab/bohr.hpp"
#include "rothlab/cyclic.hpp"
#include "rothlab/errors.hpp"

using namespace rothlab;

namespace {

CyclicFunction random_nonneg(std::uint64_t modulus, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  CyclicFunction f = CyclicFunction::zeros(modulus);
  for (auto& v : f.values) v = d(rng);
  return f;
}

Spectrum spectrum_of(std::vector<std::uint64_t> members) {
  Spectrum R;
  R.delta = 0.1;
  R.members = std::move(members);
  return R;
}

}  // namespace

TEST_CASE("fractional_distance") {
  CHECK(fractional_distance(7, 13) == doctest::Approx(6.0 / 13.0));
  CHECK(fractional_distance(0, 13) == 0.0);
  CHECK(fractional_distance(3, 13) == doctest::Approx(3.0 / 13.0));
  CHECK(fractional_distance(13, 13) == 0.0);
  CHECK(fractional_distance(20, 13) == doctest::Approx(6.0 / 13.0));
}

TEST_CASE("bohr_set examples") {
  SUBCASE("single frequency, quarter width") {
    const BohrSet B = bohr_set(spectrum_of({1}), 0.25, 13);
    CHECK(B.members == std::vector<std::uint64_t>{0, 1, 2, 3, 10, 11, 12});
  }
  SUBCASE("width below 1/N' collapses to {0}") {
    const BohrSet B = bohr_set(spectrum_of({1}), 0.05, 13);
    CHECK(B.members == std::vector<std::uint64_t>{0});
  }
  SUBCASE("two frequencies") {
    const BohrSet B = bohr_set(spectrum_of({1, 2}), 0.25, 13);
    CHECK(B.members == std::vector<std::uint64_t>{0, 1, 12});
  }
  SUBCASE("width outside (0, 1/4] is rejected") {
    CHECK_THROWS_AS(bohr_set(spectrum_of({1}), 0.0, 13), parameter_error);
    CHECK_THROWS_AS(bohr_set(spectrum_of({1}), 0.26, 13), parameter_error);
    CHECK_THROWS_AS(bohr_set(spectrum_of({1}), -0.1, 13), parameter_error);
  }
}

TEST_CASE("bohr membership equals the per-element definition") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t n = (trial % 2) ? 499 : 1009;
    std::vector<std::uint64_t> xs{1};
    while (xs.size() < 1 + trial % 4) {
      const std::uint64_t x = 2 + rng() % (n - 2);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    const double eps = std::vector<double>{0.05, 0.1, 0.2}[trial % 3];
    const BohrSet B = bohr_set(spectrum_of(xs), eps, n);
    for (std::uint64_t m = 0; m < n; ++m) {
      bool expect = true;
      for (std::uint64_t x : xs) {
        const std::uint64_t r = (m * x) % n;
        if (static_cast<double>(std::min(r, n - r)) > eps * static_cast<double>(n))
          expect = false;
      }
      const bool got = std::binary_search(B.members.begin(), B.members.end(), m);
      CHECK(got == expect);
    }
  }
}

TEST_CASE("bohr sets are symmetric, contain zero, obey the pigeonhole bound") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t n = 2 + rng() % 9'998;
    std::vector<std::uint64_t> xs{1};
    while (xs.size() < 1 + trial % 4) xs.push_back(2 + rng() % (n > 2 ? n - 2 : 1));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const double eps = std::vector<double>{0.05, 0.1, 0.2}[trial % 3];
    const BohrSet B = bohr_set(spectrum_of(xs), eps, n);
    CHECK(std::binary_search(B.members.begin(), B.members.end(), 0ull));
    for (std::uint64_t m : B.members)
      if (m != 0) CHECK(std::binary_search(B.members.begin(), B.members.end(), n - m));
    CHECK(bohr_size_certified(B.members.size(), n, eps, xs.size()));
    CHECK(static_cast<double>(B.members.size()) >=
          bohr_pigeonhole_bound(n, eps, xs.size()) - 1e-9);
  }
}

TEST_CASE("kernel mass is exactly one") {
  const BohrSet B = bohr_set(spectrum_of({1, 5}), 0.2, 1009);
  const SmoothingKernel k = make_kernel(B);
  double mass = 0.0;
  for (double v : k.sigma.values) mass += v;
  CHECK(std::abs(mass - 1.0) <= 1e-12);
  CHECK(k.sigma.values[0] > 0.0);
}

TEST_CASE("smooth") {
  SUBCASE("point-mass kernel is the identity") {
    const CyclicFunction a = random_nonneg(101, 4);
    SmoothingKernel k;
    k.bohr.modulus = 101;
    k.bohr.members = {0};
    k.sigma = CyclicFunction::zeros(101);
    k.sigma.values[0] = 1.0;
    const CyclicFunction a1 = smooth(a, k);
    for (std::uint64_t i = 0; i < 101; ++i)
      CHECK(a1.values[i] == doctest::Approx(a.values[i]).epsilon(1e-12));
  }
  SUBCASE("constants are fixed points") {
    CyclicFunction c = CyclicFunction::zeros(101);
    for (auto& v : c.values) v = 0.7;
    const BohrSet B = bohr_set(spectrum_of({1}), 0.1, 101);
    const CyclicFunction c1 = smooth(c, make_kernel(B));
    for (double v : c1.values) CHECK(v == doctest::Approx(0.7).epsilon(1e-12));
  }
  SUBCASE("transform route equals direct convolution and the oracle") {
    const CyclicFunction a = random_nonneg(101, 9);
    const BohrSet B = bohr_set(spectrum_of({1}), 0.02, 101);  // 5 members
    CHECK(B.members.size() == 5);
    const SmoothingKernel k = make_kernel(B);
    const CyclicFunction fast = smooth(a, k);
    const CyclicFunction direct = smooth_direct(a, k);
    const auto oracle = oracles::convolve_definition(a.values, k.sigma.values);
    for (std::uint64_t i = 0; i < 101; ++i) {
      CHECK(fast.values[i] == doctest::Approx(direct.values[i]).epsilon(1e-9));
      CHECK(direct.values[i] == doctest::Approx(oracle[i]).epsilon(1e-9));
    }
  }
  SUBCASE("mass and sign are preserved") {
    const CyclicFunction a = random_nonneg(499, 10);
    const SmoothingKernel k = make_kernel(bohr_set(spectrum_of({1, 7}), 0.1, 499));
    const CyclicFunction a1 = smooth(a, k);
    CHECK(a1.l1_norm() == doctest::Approx(a.l1_norm()).epsilon(1e-9));
    for (double v : a1.values) CHECK(v >= 0.0);
  }
  SUBCASE("modulus mismatch") {
    const CyclicFunction a = random_nonneg(101, 4);
    SmoothingKernel k = make_kernel(bohr_set(spectrum_of({1}), 0.1, 103));
    CHECK_THROWS_AS(smooth(a, k), input_error);
  }
}

TEST_CASE("kernel deviation") {
  SUBCASE("point kernel has zero deviation") {
    SmoothingKernel k;
    k.bohr.modulus = 101;
    k.bohr.members = {0};
    k.sigma = CyclicFunction::zeros(101);
    k.sigma.values[0] = 1.0;
    CHECK(kernel_deviation(k, spectrum_of({1, 17})) <= 1e-12);
  }
  SUBCASE("single-phase bounds and the 30*eps cap") {
    std::mt19937_64 rng(73);
    for (double eps : {0.01, 0.02, 0.05}) {
      for (int trial = 0; trial < 5; ++trial) {
        const std::uint64_t n = 499 + 510 * (trial % 2);  // 499 or 1009
        std::vector<std::uint64_t> xs{1, 2 + rng() % (n - 2)};
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        const Spectrum R = spectrum_of(xs);
        const SmoothingKernel k = make_kernel(bohr_set(R, eps, n));
        const ComplexCyclicFunction sh = dft(k.sigma);
        for (std::uint64_t x : R.members) {
          const std::uint64_t neg2 = (2 * (n - x)) % n;
          CHECK(std::abs(sh.values[x] - 1.0) <= 2 * std::numbers::pi * eps + 1e-9);
          CHECK(std::abs(sh.values[neg2] - 1.0) <= 4 * std::numbers::pi * eps + 1e-9);
        }
        CHECK(kernel_deviation(k, R) <= 30.0 * eps);
      }
    }
  }
}
