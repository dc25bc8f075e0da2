#include "rothlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <sstream>

#include "rothlab/bohr.hpp"
#include "rothlab/correlation.hpp"
#include "rothlab/cyclic.hpp"
#include "rothlab/density.hpp"
#include "rothlab/errors.hpp"
#include "rothlab/primes.hpp"
#include "rothlab/report_io.hpp"
#include "rothlab/wtrick.hpp"

namespace rothlab {

namespace {

std::vector<std::uint64_t> trial_division_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

CyclicFunction random_function(std::uint64_t modulus, std::mt19937_64& rng) {
  CyclicFunction f = CyclicFunction::zeros(modulus);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (auto& v : f.values) v = d(rng);
  return f;
}

double rel_err(double a, double b) {
  const double m = std::max(std::abs(a), std::abs(b));
  return m > 0 ? std::abs(a - b) / m : 0.0;
}

class Suite {
 public:
  explicit Suite(VerifySummary& sink) : sink_(sink) {}

  template <typename Fn>
  void check(const std::string& name, Fn&& fn) {
    VerifyCheck c;
    c.name = name;
    try {
      std::ostringstream detail;
      c.pass = fn(detail);
      c.detail = detail.str();
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("exception: ") + e.what();
    }
    sink_.checks.push_back(std::move(c));
  }

 private:
  VerifySummary& sink_;
};

}  // namespace

bool VerifySummary::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.pass; });
}

std::size_t VerifySummary::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [](const VerifyCheck& c) { return !c.pass; }));
}

VerifySummary verify_suite(const PipelineConfig& config, const VerifyHooks& hooks) {
  VerifySummary summary;
  Suite suite(summary);
  std::mt19937_64 rng(config.seed);

  // primes_core
  suite.check("sieve matches trial division at 1e2/1e4/1e6", [&](std::ostream& d) {
    for (std::uint64_t limit : {100ull, 10'000ull, 1'000'000ull}) {
      if (sieve_primes(limit).primes() != trial_division_primes(limit)) {
        d << "mismatch at limit " << limit;
        return false;
      }
    }
    return true;
  });

  suite.check("next_prime_above leaves no prime in the gap", [&](std::ostream& d) {
    std::uniform_real_distribution<double> xs(1.0, 100'000.0);
    for (int i = 0; i < 200; ++i) {
      const double x = xs(rng);
      const std::uint64_t p = next_prime_above(x);
      if (!(static_cast<double>(p) > x) || !is_prime(p)) {
        d << "bad result " << p << " for x=" << x;
        return false;
      }
      for (std::uint64_t q = static_cast<std::uint64_t>(std::floor(x)) + 1; q < p; ++q)
        if (is_prime(q)) {
          d << "skipped prime " << q << " below " << p;
          return false;
        }
      if (p > 2 * static_cast<std::uint64_t>(std::ceil(x))) {
        d << "postulate bound violated at x=" << x;
        return false;
      }
    }
    return true;
  });

  suite.check("primorial multiplies the sieve's primes", [&](std::ostream& d) {
    for (double z : {3.0, 5.0, 7.0, 11.0, 13.0, 23.0}) {
      const PrimeTable table = sieve_primes(static_cast<std::uint64_t>(z));
      big_int expect = 1;
      for (std::uint64_t p : table.primes()) expect *= p;
      if (primorial(z) != expect) {
        d << "mismatch at z=" << z;
        return false;
      }
    }
    return true;
  });

  suite.check("progression counts match a direct residue scan", [&](std::ostream& d) {
    const PrimeTable t = sieve_primes(10'000);
    for (auto [b, M] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
             {1, 6}, {5, 6}, {7, 30}, {0, 2}}) {
      std::uint64_t direct = 0;
      for (std::uint64_t p : t.primes())
        if (p >= 3 && p <= 9'000 && p % M == b % M) ++direct;
      if (count_primes_in_progression(b, M, 3, 9'000) != direct) {
        d << "mismatch at b=" << b << " M=" << M;
        return false;
      }
    }
    return true;
  });

  // wtrick
  suite.check("partition identity, exact, over random subsets", [&](std::ostream& d) {
    const PrimeTable t = sieve_primes(20'000);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::uint64_t> A;
      for (std::uint64_t p : t.primes())
        if ((rng() & 1) == 0) A.push_back(p);
      if (A.empty()) continue;
      for (double z : {3.0, 5.0}) {
        const WTrickParams params = make_params(20'000, z);
        std::uint64_t lhs = 0;
        for (const auto& [b, count] : progression_counts(A, params)) lhs += count;
        std::uint64_t in_head = 0;
        for (std::uint64_t m : A)
          if (m <= params.M) ++in_head;
        if (lhs != A.size() - in_head) {
          d << "identity broke at z=" << z;
          return false;
        }
        const ProgressionChoice best = choose_progression(A, params);
        if (best.count * euler_phi(params.M) < A.size() - in_head) {
          d << "chosen class below the coprime average";
          return false;
        }
      }
    }
    return true;
  });

  suite.check("reduce then re-expand recovers the intersection", [&](std::ostream& d) {
    const PrimeTable t = sieve_primes(5'000);
    const WTrickParams params = make_params(5'000, 3.0);
    const ProgressionChoice best = choose_progression(t.primes(), params);
    const ReducedSet A0 = reduce_to_cyclic(t.primes(), params, best.b);
    std::vector<std::uint64_t> expanded;
    for (std::uint64_t n : A0.residues) expanded.push_back(best.b + n * params.M);
    std::vector<std::uint64_t> expect;
    for (std::uint64_t p : t.primes())
      if (p > params.M && p % params.M == best.b % params.M) expect.push_back(p);
    if (expanded != expect) {
      d << "round trip lost elements";
      return false;
    }
    return true;
  });

  suite.check("reduction creates no wrap-around 3APs", [&](std::ostream& d) {
    const PrimeTable t = sieve_primes(500);
    const WTrickParams params = make_params(500, 3.0);
    const ProgressionChoice best = choose_progression(t.primes(), params);
    const ReducedSet A0 = reduce_to_cyclic(t.primes(), params, best.b);
    const auto& r = A0.residues;
    const std::uint64_t n = params.Nprime;
    for (std::uint64_t x : r)
      for (std::uint64_t y : r)
        for (std::uint64_t w : r)
          if ((x + w) % n == (2 * y) % n && x + w != 2 * y) {
            d << "cyclic AP (" << x << "," << y << "," << w << ") is not an integer AP";
            return false;
          }
    return true;
  });

  // cyclic_fourier
  suite.check("chirp transform matches the direct evaluator", [&](std::ostream& d) {
    for (std::uint64_t n : {101ull, 499ull, 1009ull, 4093ull}) {
      const CyclicFunction f = random_function(n, rng);
      ComplexCyclicFunction fast = dft(f);
      if (hooks.corrupt_transform) fast.values[1] += 0.5;
      const ComplexCyclicFunction slow = dft_direct(f);
      double worst = 0.0, scale = 0.0;
      for (std::uint64_t k = 0; k < n; ++k) {
        worst = std::max(worst, std::abs(fast.values[k] - slow.values[k]));
        scale = std::max(scale, std::abs(slow.values[k]));
      }
      if (worst > 1e-9 * scale) {
        d << "N'=" << n << " max deviation " << worst;
        return false;
      }
    }
    return true;
  });

  suite.check("Parseval and inversion round-trip", [&](std::ostream& d) {
    for (std::uint64_t n : {101ull, 1009ull, 65'537ull}) {
      const CyclicFunction f = random_function(n, rng);
      const ComplexCyclicFunction fhat = dft(f);
      double time_side = 0.0;
      for (double v : f.values) time_side += v * v;
      double freq_side = 0.0;
      for (const auto& v : fhat.values) freq_side += std::norm(v);
      freq_side /= static_cast<double>(n);
      if (rel_err(time_side, freq_side) > 1e-9) {
        d << "Parseval off at N'=" << n;
        return false;
      }
      const ComplexCyclicFunction back = idft(fhat);
      double worst = 0.0;
      for (std::uint64_t k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(back.values[k] - f.values[k]));
      if (worst > 1e-9) {
        d << "inversion residual " << worst << " at N'=" << n;
        return false;
      }
    }
    return true;
  });

  suite.check("triple sums agree between routes", [&](std::ostream& d) {
    for (std::uint64_t n : {101ull, 499ull}) {
      for (int i = 0; i < 5; ++i) {
        const CyclicFunction f = random_function(n, rng);
        const CyclicFunction g = random_function(n, rng);
        const CyclicFunction h = random_function(n, rng);
        const double direct = triple_sum_direct(f, g, h);
        const double fourier = triple_sum_fourier(f, g, h);
        if (rel_err(direct, fourier) > 1e-6) {
          d << "N'=" << n << " direct=" << direct << " fourier=" << fourier;
          return false;
        }
      }
    }
    return true;
  });

  suite.check("large spectrum equals an exhaustive scan", [&](std::ostream& d) {
    const CyclicFunction f = random_function(499, rng);
    const ComplexCyclicFunction fhat = dft(f);
    const Spectrum R = large_spectrum(fhat, 3.0);
    std::vector<std::uint64_t> expect;
    for (std::uint64_t x = 0; x < 499; ++x)
      if (std::abs(fhat.values[x]) >= 3.0) expect.push_back(x);
    if (std::find(expect.begin(), expect.end(), 1) == expect.end()) {
      expect.push_back(1);
      std::sort(expect.begin(), expect.end());
    }
    if (R.members != expect) {
      d << "scan mismatch";
      return false;
    }
    return true;
  });

  suite.check("spectrum size certificate", [&](std::ostream& d) {
    const CyclicFunction f = random_function(1009, rng);
    const ComplexCyclicFunction fhat = dft(f);
    for (double delta : {0.5, 2.0, 10.0}) {
      const SpectrumCertificate c = spectrum_size_certificate(fhat, delta);
      if (!c.holds) {
        d << "r=" << c.r << " exceeded bound " << c.bound << " at delta=" << delta;
        return false;
      }
    }
    return true;
  });

  // bohr_smoothing
  suite.check("Bohr sets: pigeonhole, symmetry, unit mass", [&](std::ostream& d) {
    for (int i = 0; i < 20; ++i) {
      const std::uint64_t n = (i % 2) ? 1009 : 4093;
      Spectrum R;
      R.delta = 0.1;
      R.members = {1};
      while (R.members.size() < static_cast<std::size_t>(1 + i % 4)) {
        const std::uint64_t x = 2 + rng() % (n - 2);
        if (std::find(R.members.begin(), R.members.end(), x) == R.members.end())
          R.members.push_back(x);
      }
      std::sort(R.members.begin(), R.members.end());
      const double eps = std::vector<double>{0.05, 0.1, 0.2}[i % 3];
      const BohrSet B = bohr_set(R, eps, n);
      if (!bohr_size_certified(B.members.size(), n, eps, R.members.size())) {
        d << "pigeonhole failed, |B|=" << B.members.size();
        return false;
      }
      if (!std::binary_search(B.members.begin(), B.members.end(), 0ull)) {
        d << "0 missing";
        return false;
      }
      for (std::uint64_t m : B.members)
        if (m != 0 && !std::binary_search(B.members.begin(), B.members.end(), n - m)) {
          d << "not symmetric at " << m;
          return false;
        }
      const SmoothingKernel k = make_kernel(B);
      double mass = 0.0;
      for (double v : k.sigma.values) mass += v;
      if (std::abs(mass - 1.0) > 1e-12) {
        d << "sigma mass " << mass;
        return false;
      }
    }
    return true;
  });

  suite.check("smoothing: transform route equals direct convolution", [&](std::ostream& d) {
    for (std::uint64_t n : {101ull, 499ull}) {
      Spectrum R;
      R.delta = 0.1;
      R.members = {1, 3};
      const BohrSet B = bohr_set(R, 0.2, n);
      const SmoothingKernel k = make_kernel(B);
      CyclicFunction a = random_function(n, rng);
      for (auto& v : a.values) v = std::abs(v);
      const CyclicFunction fast = smooth(a, k);
      const CyclicFunction slow = smooth_direct(a, k);
      double worst = 0.0;
      for (std::uint64_t i = 0; i < n; ++i)
        worst = std::max(worst, std::abs(fast.values[i] - slow.values[i]));
      if (worst > 1e-9) {
        d << "N'=" << n << " residual " << worst;
        return false;
      }
      if (rel_err(fast.l1_norm(), a.l1_norm()) > 1e-9) {
        d << "mass not preserved";
        return false;
      }
    }
    return true;
  });

  suite.check("kernel deviation within 30*eps", [&](std::ostream& d) {
    for (double eps : {0.02, 0.05}) {
      for (std::uint64_t n : {499ull, 1009ull}) {
        Spectrum R;
        R.delta = 0.1;
        R.members = {1, 2 + rng() % (n - 2)};
        std::sort(R.members.begin(), R.members.end());
        R.members.erase(std::unique(R.members.begin(), R.members.end()), R.members.end());
        const SmoothingKernel k = make_kernel(bohr_set(R, eps, n));
        const double dev = kernel_deviation(k, R);
        if (dev > 30.0 * eps) {
          d << "deviation " << dev << " beyond cap at eps=" << eps;
          return false;
        }
      }
    }
    return true;
  });

  // sieve_correlation
  suite.check("lift preserves mass and centers the window", [&](std::ostream& d) {
    const CyclicFunction f = random_function(37, rng);
    const LiftedFunction lf = lift(f);
    double cy = 0.0;
    for (double v : f.values) cy += v;
    if (std::abs(lf.sum() - cy) > 1e-12) {
      d << "mass changed";
      return false;
    }
    CyclicFunction point = CyclicFunction::zeros(37);
    point.values[36] = 1.0;
    if (lift(point).at(-1) != 1.0) {
      d << "N'-1 should lift to -1";
      return false;
    }
    return true;
  });

  suite.check("majorant support equals trial division", [&](std::ostream& d) {
    const WTrickParams params = make_params(100, 3.0);
    const PrimeMajorant lam = prime_majorant(params, 1);
    const auto oracle = trial_division_primes(1 + params.Nprime * params.M);
    for (std::uint64_t n = 1; n <= params.Nprime; ++n) {
      const bool expect = std::binary_search(oracle.begin(), oracle.end(),
                                             1 + n * params.M);
      if (static_cast<bool>(lam.prime_flag[n - 1]) != expect) {
        d << "flag mismatch at n=" << n;
        return false;
      }
    }
    return true;
  });

  suite.check("pair correlation symmetry and shift invariance", [&](std::ostream& d) {
    const WTrickParams params = make_params(2'000, 5.0);
    const PrimeMajorant lam = prime_majorant(params, 1);
    for (int i = 0; i < 50; ++i) {
      const std::int64_t m1 = static_cast<std::int64_t>(rng() % 60) - 30;
      const std::int64_t m2 = static_cast<std::int64_t>(rng() % 60) - 30;
      const std::int64_t t = static_cast<std::int64_t>(rng() % 20) - 10;
      const double v = pair_correlation(lam, m1, m2);
      if (v != pair_correlation(lam, m2, m1)) {
        d << "asymmetric at (" << m1 << "," << m2 << ")";
        return false;
      }
      if (v != pair_correlation(lam, m1 + t, m2 + t)) {
        d << "not shift invariant";
        return false;
      }
    }
    return true;
  });

  suite.check("local densities and factor product cap", [&](std::ostream& d) {
    const WTrickParams params = make_params(2'000, 5.0);
    if (local_density_rho(3, 14, params) != 0 || local_density_rho(7, 14, params) != 1 ||
        local_density_rho(7, 5, params) != 2) {
      d << "rho table wrong";
      return false;
    }
    const double cap = prime_factor_product_cap(params.z, params.Nprime);
    for (int i = 0; i < 200; ++i) {
      const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % (params.Nprime - 1));
      if (prime_factor_product(m, params.z, params.Nprime) > cap) {
        d << "cap exceeded at m=" << m;
        return false;
      }
    }
    return true;
  });

  suite.check("quadratic expansion of the smoothed majorant", [&](std::ostream& d) {
    const WTrickParams params = make_params(2'000, 5.0);
    const PrimeMajorant lam = prime_majorant(params, 1);
    Spectrum R;
    R.delta = 0.1;
    R.members = {1};
    const SmoothingKernel k = make_kernel(bohr_set(R, 0.05, params.Nprime));
    if (k.bohr.members.size() > 64) {
      d << "frame too wide for the exhaustive check";
      return false;
    }
    const ExpansionCheck ec = quadratic_expansion_check(lam, k);
    if (!ec.agree) {
      d << "sides differ: " << ec.convolution_side << " vs " << ec.correlation_side;
      return false;
    }
    return true;
  });

  suite.check("l2 domination chain on a small frame", [&](std::ostream& d) {
    const PrimeTable t = sieve_primes(2'000);
    const WTrickParams params = make_params(2'000, 5.0);
    const ProgressionChoice best = choose_progression(t.primes(), params);
    const ReducedSet A0 = reduce_to_cyclic(t.primes(), params, best.b);
    const double scale = std::log(2'000.0) /
                         (static_cast<double>(params.Nprime) * std::log(params.z));
    CyclicFunction a = CyclicFunction::zeros(params.Nprime);
    for (std::uint64_t n : A0.residues) a.values[n] = scale;
    Spectrum R;
    R.delta = 0.1;
    R.members = {1};
    const SmoothingKernel k = make_kernel(bohr_set(R, 0.05, params.Nprime));
    const CyclicFunction a1 = smooth(a, k);
    const PrimeMajorant lam = prime_majorant(params, best.b);
    const L2Certificate c = l2_certificate(a, a1, lam, k);
    if (!c.lhs_equals_mid || !c.mid_le_rhs) {
      d << "chain broke: " << c.lhs << " / " << c.mid << " / " << c.rhs;
      return false;
    }
    return true;
  });

  // density_argument
  suite.check("3AP counts match the cubic oracle", [&](std::ostream& d) {
    for (std::uint64_t n : {101ull, 499ull}) {
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::uint64_t> members;
        for (std::uint64_t x = 0; x < n; ++x)
          if (rng() % 5 == 0 && members.size() < 200) members.push_back(x);
        std::uint64_t oracle = 0;
        for (std::uint64_t m = 0; m < n; ++m)
          for (std::uint64_t dd = 1; dd < n; ++dd) {
            const std::uint64_t x1 = m, x2 = (m + dd) % n, x3 = (m + 2 * dd) % n;
            const bool all =
                std::binary_search(members.begin(), members.end(), x1) &&
                std::binary_search(members.begin(), members.end(), x2) &&
                std::binary_search(members.begin(), members.end(), x3);
            if (all) ++oracle;
          }
        const ThreeAPCount got = count_3aps(members, n);
        if (got.nontrivial != oracle || got.trivial != members.size()) {
          d << "count mismatch at N'=" << n << ": " << got.nontrivial << " vs " << oracle;
          return false;
        }
      }
    }
    return true;
  });

  suite.check("full group Z/5 has exactly 20 ordered 3APs", [&](std::ostream& d) {
    const std::vector<std::uint64_t> all{0, 1, 2, 3, 4};
    const ThreeAPCount got = count_3aps(all, 5);
    if (got.nontrivial != 20 || got.trivial != 5) {
      d << "got " << got.nontrivial << "/" << got.trivial;
      return false;
    }
    return true;
  });

  suite.check("subprogression window identity", [&](std::ostream& d) {
    std::vector<std::uint64_t> members{0, 1};
    if (!subprogression_identity(members, 1, 3, 5)) {
      d << "basic window count failed";
      return false;
    }
    for (int trial = 0; trial < 10; ++trial) {
      const std::uint64_t n = 499;
      std::vector<std::uint64_t> s;
      for (std::uint64_t x = 0; x < n; ++x)
        if (rng() % 3 == 0) s.push_back(x);
      const std::uint64_t dd = 1 + rng() % (n - 1);
      const std::uint64_t L = 1 + rng() % 40;
      if (!subprogression_identity(s, dd, L, n)) {
        d << "failed at d=" << dd << " L=" << L;
        return false;
      }
    }
    return true;
  });

  suite.check("extraction level set and size guarantee", [&](std::ostream& d) {
    CyclicFunction uniform = CyclicFunction::zeros(101);
    for (auto& v : uniform.values) v = 1.0 / 101.0;
    const ExtractionResult ex = extract_dense(uniform, 1.0);
    if (ex.members.size() != 101 || !ex.guarantee_holds) {
      d << "uniform case failed";
      return false;
    }
    CyclicFunction point = CyclicFunction::zeros(101);
    point.values[0] = 1.0;
    const ExtractionResult ep = extract_dense(point, 1.0);
    if (ep.members != std::vector<std::uint64_t>{0} || !ep.guarantee_holds) {
      d << "point mass case failed";
      return false;
    }
    return true;
  });

  suite.check("AP-free self count collapses to the diagonal", [&](std::ostream& d) {
    std::vector<std::uint64_t> window(50);
    std::iota(window.begin(), window.end(), 1);
    const std::vector<std::uint64_t> apfree = greedy_apfree_subset(window);
    const ThreeAPCount counts = count_3aps(apfree, 101);
    if (counts.nontrivial != 0) {
      d << "greedy set is not AP-free mod 101";
      return false;
    }
    WTrickParams params;
    params.N = 606;
    params.z = 3.0;
    params.M = 6;
    params.Nprime = 101;
    params.b = 1;
    ReducedSet A0{params, apfree};
    CyclicFunction a = CyclicFunction::zeros(101);
    for (std::uint64_t n : apfree) a.values[n] = 0.25;
    const SelfCountCheck sc = apfree_selfcount(a, A0);
    if (!sc.ap_free || !sc.equal) {
      d << "identity not exact: " << sc.cube_sum << " vs " << sc.triple_sum;
      return false;
    }
    return true;
  });

  suite.check("threshold formula values and eventual decrease", [&](std::ostream& d) {
    if (rel_err(theorem_threshold_from_loglog(8.0, 1.0), std::log(8.0) / 2.0) > 1e-12) {
      d << "spot value wrong";
      return false;
    }
    double prev = theorem_threshold_from_loglog(21.0, 1.0);
    for (double t = 22.0; t <= 60.0; t += 1.0) {
      const double cur = theorem_threshold_from_loglog(t, 1.0);
      if (cur >= prev) {
        d << "not decreasing at lnln N = " << t;
        return false;
      }
      prev = cur;
    }
    return true;
  });

  // pipeline
  suite.check("pipeline runs are deterministic and JSON round-trips", [&](std::ostream& d) {
    PipelineConfig cfg;
    cfg.N = 2'000;
    cfg.seed = config.seed;
    cfg.subset = SubsetKind::random_density;
    cfg.density = 0.7;
    PipelineReport r1 = run_pipeline(cfg);
    PipelineReport r2 = run_pipeline(cfg);
    r1.timings.clear();
    r2.timings.clear();
    if (!(r1 == r2)) {
      d << "two runs differ";
      return false;
    }
    if (report_from_json(report_to_json(r1)) != r1) {
      d << "JSON round trip changed the report";
      return false;
    }
    if (r1.overall != "holds") {
      d << "pipeline hard checks: " << r1.overall;
      return false;
    }
    return true;
  });

  suite.check("subset generation is seeded and sound", [&](std::ostream& d) {
    PipelineConfig cfg;
    cfg.N = 10'000;
    cfg.subset = SubsetKind::random_density;
    cfg.density = 0.5;
    cfg.seed = 42;
    const auto s1 = generate_subset(cfg);
    const auto s2 = generate_subset(cfg);
    if (s1 != s2) {
      d << "same seed, different sets";
      return false;
    }
    cfg.density = 1.0;
    if (generate_subset(cfg) != sieve_primes(10'000).primes()) {
      d << "density 1 must keep every prime";
      return false;
    }
    cfg.subset = SubsetKind::behrend_apfree;
    const auto apfree = generate_subset(cfg);
    for (std::size_t i = 0; i < apfree.size(); ++i)
      for (std::size_t j = i + 1; j < apfree.size(); ++j) {
        const std::uint64_t c = 2 * apfree[j] - apfree[i];
        if (c > apfree[j] &&
            std::binary_search(apfree.begin(), apfree.end(), c)) {
          d << "AP survived the greedy filter";
          return false;
        }
      }
    return true;
  });

  return summary;
}

}  // namespace rothlab
