// Acceptance gate: every numbered criterion below runs at its stated
// tolerance and prints one PASS/FAIL line. Exit status is the failure count.
//
// `acceptance --dump-moments` prints the moment snapshot table used by
// criterion 10 (run once at first build, values pinned below).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rothlab/bohr.hpp"
#include "rothlab/correlation.hpp"
#include "rothlab/cyclic.hpp"
#include "rothlab/density.hpp"
#include "rothlab/pipeline.hpp"
#include "rothlab/primes.hpp"
#include "rothlab/verify.hpp"
#include "rothlab/wtrick.hpp"

using namespace rothlab;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << name;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

double rel_diff(double a, double b) {
  const double m = std::max(std::abs(a), std::abs(b));
  return m > 0 ? std::abs(a - b) / m : 0.0;
}

CyclicFunction random_function(std::uint64_t modulus, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  CyclicFunction f = CyclicFunction::zeros(modulus);
  for (auto& v : f.values) v = d(rng);
  return f;
}

struct NamedRun {
  std::string name;
  PipelineReport rep;
};

// ---- criterion 1 -----------------------------------------------------------
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  double worst = 0.0;
  bool ok = true;
  int done = 0;
  for (std::uint64_t n : {101ull, 499ull, 1009ull}) {
    const int count = (n == 1009) ? 66 : 67;
    for (int i = 0; i < count; ++i, ++done) {
      const CyclicFunction f = random_function(n, rng);
      const CyclicFunction g = random_function(n, rng);
      const CyclicFunction h = random_function(n, rng);
      const double direct = triple_sum_direct(f, g, h);
      const double fourier = triple_sum_fourier(f, g, h);
      const double err = rel_diff(direct, fourier);
      worst = std::max(worst, err);
      if (err > 1e-6) ok = false;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << done << " functions, worst rel err " << worst << ", " << secs << " s";
  report(1, "spectral vs direct 3AP functional", ok && secs < 10.0 && done == 200,
         d.str());
}

// ---- criterion 2 -----------------------------------------------------------
std::pair<PipelineReport, PipelineReport> criterion_2() {
  PipelineConfig cfg;
  cfg.N = 10'000;
  cfg.z_override = 3.0;
  cfg.delta = 0.1;
  cfg.epsilon = 0.1;
  const PipelineReport rep = run_pipeline(cfg);
  const double err = rel_diff(rep.delta_direct, rep.delta_fourier);
  // At the stated frame the smoothing degenerates (B = {0}): prime structure
  // at denominators 5..13 survives z = 3, so the spectrum is wide and both
  // routes measure a zero discrepancy. Equality then means both sit below
  // transform noise. A second frame with delta = 0.5 keeps B wide and makes
  // the relative comparison bite on a genuinely nonzero Delta.
  const bool equal_to_tol =
      err <= 1e-6 || std::max(rep.delta_direct, rep.delta_fourier) <= 1e-9;

  PipelineConfig wide = cfg;
  wide.z_override.reset();
  wide.delta = 0.5;
  wide.epsilon = 0.05;
  const PipelineReport rep2 = run_pipeline(wide);
  const double err2 = rel_diff(rep2.delta_direct, rep2.delta_fourier);
  const bool nondegenerate_ok = rep2.bohr_size > 1 && rep2.delta_fourier > 1e-3 &&
                                err2 <= 1e-6 && rep2.delta_consistency == "holds";

  std::ostringstream d;
  d << "Delta_direct=" << rep.delta_direct << " Delta_fourier=" << rep.delta_fourier
    << " rel err " << err << ", Delta/(eps+delta)=" << rep.delta_ratio
    << "; nondegenerate frame: Delta=" << rep2.delta_fourier << " rel err " << err2
    << " ratio=" << rep2.delta_ratio;
  report(2, "discrepancy consistency on the N=1e4 pipeline",
         rep.delta_consistency == "holds" && equal_to_tol && nondegenerate_ok, d.str());
  return {rep, rep2};
}

// ---- criterion 3 -----------------------------------------------------------
void criterion_3() {
  std::mt19937_64 rng(303);
  const PrimeTable table = sieve_primes(100'000);
  bool ok = true;
  std::string fail_detail;
  for (int trial = 0; trial < 50 && ok; ++trial) {
    std::vector<std::uint64_t> A;
    for (std::uint64_t p : table.primes())
      if ((rng() & 1) == 0) A.push_back(p);
    for (double z : {3.0, 5.0, 7.0}) {
      const WTrickParams params = make_params(100'000, z);
      std::uint64_t sum = 0, best = 0;
      for (const auto& [b, count] : progression_counts(A, params)) {
        sum += count;
        best = std::max(best, count);
      }
      std::uint64_t head = 0;
      for (std::uint64_t m : A)
        if (m <= params.M) ++head;
      if (sum != A.size() - head || best * euler_phi(params.M) < A.size() - head) {
        ok = false;
        std::ostringstream d;
        d << "trial " << trial << " M=" << params.M;
        fail_detail = d.str();
        break;
      }
    }
  }
  report(3, "partition identity over 50 random subsets, M in {6,30,210}", ok,
         ok ? "exact for all 150 frames" : fail_detail);
}

// ---- criterion 4 -----------------------------------------------------------
void criterion_4() {
  std::mt19937_64 rng(404);
  const std::vector<std::uint64_t> moduli{101, 499, 1009, 4093, 9973};
  bool ok = true;
  std::string fail_detail;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const std::uint64_t n = moduli[trial % moduli.size()];
    Spectrum R;
    R.delta = 0.1;
    R.members = {1};
    const std::size_t target = 1 + trial % 4;
    while (R.members.size() < target) {
      const std::uint64_t x = 2 + rng() % (n - 2);
      if (std::find(R.members.begin(), R.members.end(), x) == R.members.end())
        R.members.push_back(x);
    }
    std::sort(R.members.begin(), R.members.end());
    const double eps = std::vector<double>{0.05, 0.1, 0.2}[trial % 3];
    const BohrSet B = bohr_set(R, eps, n);
    if (!bohr_size_certified(B.members.size(), n, eps, R.members.size())) {
      ok = false;
      fail_detail = "pigeonhole bound failed";
      break;
    }
    for (std::uint64_t m : B.members)
      if (m != 0 && !std::binary_search(B.members.begin(), B.members.end(), n - m)) {
        ok = false;
        fail_detail = "asymmetric Bohr set";
      }
    const SmoothingKernel k = make_kernel(B);
    double mass = 0.0;
    for (double v : k.sigma.values) mass += v;
    if (std::abs(mass - 1.0) > 1e-12) {
      ok = false;
      fail_detail = "kernel mass off";
    }
  }
  report(4, "Bohr pigeonhole, symmetry, unit kernel mass (100 seeded)", ok,
         ok ? "" : fail_detail);
}

// ---- criteria checked on every pipeline run --------------------------------
void per_run_criteria(const std::vector<NamedRun>& runs) {
  bool dev_ok = true, l2_ok = true, extract_ok = true;
  std::ostringstream dev_d, l2_d, ex_d;
  for (const auto& [name, rep] : runs) {
    if (rep.epsilon <= 0.05 &&
        rep.kernel_deviation_value > rep.kernel_deviation_cap) {
      dev_ok = false;
      dev_d << name << " deviation " << rep.kernel_deviation_value << "; ";
    }
    if (rep.l2_chain != "holds") {
      l2_ok = false;
      l2_d << name << "; ";
    }
    if (rep.extraction_verdict == "fails") {
      extract_ok = false;
      ex_d << name << "; ";
    }
  }
  std::ostringstream dd;
  dd << runs.size() << " runs";
  report(5, "kernel deviation <= 30*eps on every run with eps <= 1/20", dev_ok,
         dev_ok ? dd.str() : dev_d.str());
  report(6, "l2 chain ||a1||_2 = ||a~*sigma~||_2 <= ||lambda*sigma~||_2", l2_ok,
         l2_ok ? dd.str() : l2_d.str());
  report(8, "dense extraction guarantee |A'| >= alpha^2 N'/(4c)", extract_ok,
         extract_ok ? dd.str() : ex_d.str());
}

// ---- criterion 7 -----------------------------------------------------------
void criterion_7() {
  std::mt19937_64 rng(707);
  const WTrickParams params = make_params(10'000, 5.0);  // N' = 673
  const PrimeMajorant lam = prime_majorant(params, 1);
  bool ok = true;
  std::size_t biggest = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    Spectrum R;
    R.delta = 0.1;
    R.members = {1};
    if (trial % 2) R.members.push_back(2 + rng() % (params.Nprime - 2));
    std::sort(R.members.begin(), R.members.end());
    R.members.erase(std::unique(R.members.begin(), R.members.end()), R.members.end());
    const double eps = std::vector<double>{0.01, 0.02, 0.04}[trial % 3];
    const SmoothingKernel k = make_kernel(bohr_set(R, eps, params.Nprime));
    if (k.bohr.members.size() > 64) {
      ok = false;
      break;
    }
    biggest = std::max(biggest, k.bohr.members.size());
    const ExpansionCheck ec = quadratic_expansion_check(lam, k, 1e-9);
    worst = std::max(worst, rel_diff(ec.convolution_side, ec.correlation_side));
    if (!ec.agree) ok = false;
  }
  std::ostringstream d;
  d << "20 instances, |B| up to " << biggest << ", worst rel err " << worst;
  report(7, "quadratic expansion of ||sigma~*lambda||_2^2, |B| <= 64", ok, d.str());
}

// ---- criterion 9 -----------------------------------------------------------
void criterion_9() {
  std::mt19937_64 rng(909);
  bool ok = true;
  std::string fail_detail;
  // window identity
  for (int trial = 0; trial < 30 && ok; ++trial) {
    const std::uint64_t n = (trial % 2) ? 499 : 1009;
    std::vector<std::uint64_t> s;
    for (std::uint64_t x = 0; x < n; ++x)
      if (rng() % 3 == 0) s.push_back(x);
    const std::uint64_t d = 1 + rng() % (n - 1);
    const std::uint64_t L = 1 + rng() % 50;
    if (!subprogression_identity(s, d, L, n)) {
      ok = false;
      fail_detail = "window identity failed";
    }
  }
  // cubic oracle
  for (std::uint64_t n : {101ull, 499ull, 1009ull}) {
    for (int trial = 0; trial < 4 && ok; ++trial) {
      std::vector<std::uint64_t> s;
      for (std::uint64_t x = 0; x < n && s.size() < 200; ++x)
        if (rng() % 4 == 0) s.push_back(x);
      const ThreeAPCount got = count_3aps(s, n);
      if (got.nontrivial != oracles::cubic_3ap_count(s, n) ||
          got.trivial != s.size()) {
        ok = false;
        fail_detail = "cubic oracle disagreed";
      }
    }
  }
  const ThreeAPCount full = count_3aps(std::vector<std::uint64_t>{0, 1, 2, 3, 4}, 5);
  if (full.nontrivial != 20) {
    ok = false;
    fail_detail = "Z/5 count is " + std::to_string(full.nontrivial);
  }
  report(9, "window identities, cubic-oracle 3AP counts, Z/5 = 20", ok, fail_detail);
}

// ---- criterion 10 ----------------------------------------------------------
struct MomentRow {
  std::uint64_t N;
  double p53, p52, p103;
};

// Pinned at first build from `acceptance --dump-moments` (all_primes, z = 5,
// seeded defaults). Regression tolerance 1e-6 relative.
const MomentRow kMomentSnapshots[] = {
    {10'000, 12.436398163752484, 4.7012900787296985, 3.8146007253949268},
    {100'000, 20.755895959672362, 4.5733356235966376, 3.5508165961929707},
    {1'000'000, 33.614145736059484, 4.2731683021724809, 3.276242797180962},
};

void criterion_10(const std::vector<const PipelineReport*>& snapshot_runs,
                  const std::vector<NamedRun>& all_runs, bool snapshots_ready) {
  bool ok = true;
  std::ostringstream d;
  // the count certificate must hold on every run, not only the snapshot ones
  for (const auto& [name, r] : all_runs)
    if (r.spectrum_certificate != "holds") {
      ok = false;
      d << "certificate failed on " << name << "; ";
    }
  const PipelineReport* prev = nullptr;
  for (std::size_t i = 0; i < std::size(kMomentSnapshots); ++i) {
    const MomentRow& row = kMomentSnapshots[i];
    const PipelineReport* rep = i < snapshot_runs.size() ? snapshot_runs[i] : nullptr;
    if (!rep || rep->N != row.N) {
      ok = false;
      d << "missing run at N=" << row.N << "; ";
      continue;
    }
    if (snapshots_ready) {
      if (rel_diff(rep->moment_p53, row.p53) > 1e-6 ||
          rel_diff(rep->moment_p52, row.p52) > 1e-6 ||
          rel_diff(rep->moment_p103, row.p103) > 1e-6) {
        ok = false;
        d << "snapshot drift at N=" << row.N << "; ";
      }
    }
    if (prev) {
      if (rep->moment_p53 > 2.0 * prev->moment_p53 ||
          rep->moment_p52 > 2.0 * prev->moment_p52 ||
          rep->moment_p103 > 2.0 * prev->moment_p103) {
        ok = false;
        d << "moment growth beyond 2x at N=" << row.N << "; ";
      }
    }
    prev = rep;
  }
  if (ok) {
    d << "r <= 1 + delta^{-5/2} sum|a^|^{5/2} on all runs; moments within "
         "snapshots, growth under 2x";
  }
  report(10, "spectrum certificate and moment snapshots", ok, d.str());
}

// ---- criterion 11 ----------------------------------------------------------
void criterion_11() {
  std::vector<std::uint64_t> window(50);
  std::iota(window.begin(), window.end(), 1);
  const std::vector<std::uint64_t> apfree = greedy_apfree_subset(window);
  WTrickParams params;
  params.N = 606;
  params.z = 3.0;
  params.M = 6;
  params.Nprime = 101;
  params.b = 1;
  const ReducedSet A0{params, apfree};
  CyclicFunction a = CyclicFunction::zeros(101);
  const double scale = std::log(606.0) / (101.0 * std::log(3.0));
  for (std::uint64_t n : apfree) a.values[n] = scale;
  bool ok = count_3aps(apfree, 101).nontrivial == 0;
  std::ostringstream d;
  if (ok) {
    const SelfCountCheck sc = apfree_selfcount(a, A0);
    ok = sc.ap_free && sc.equal && sc.cube_sum == sc.triple_sum;
    d << "|A0| = " << apfree.size() << ", both sides " << sc.cube_sum << " (bitwise)";
  } else {
    d << "construction was not progression-free";
  }
  report(11, "AP-free self count is exactly diagonal in Z/101", ok, d.str());
}

// ---- criterion 12 ----------------------------------------------------------
void criterion_12(double pipeline_secs, const PipelineReport& big) {
  const auto t0 = std::chrono::steady_clock::now();
  PipelineConfig cfg;
  const VerifySummary s = verify_suite(cfg);
  const double verify_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << "pipeline(N=1e6, N'=" << big.Nprime << ") " << pipeline_secs << " s, verify ("
    << s.checks.size() << " checks) " << verify_secs << " s";
  report(12, "performance gate: pipeline < 60 s, verify < 120 s",
         pipeline_secs < 60.0 && verify_secs < 120.0 && s.all_pass() &&
             big.Nprime == 66'683,
         d.str());
}

int dump_moments() {
  for (std::uint64_t N : {10'000ull, 100'000ull, 1'000'000ull}) {
    PipelineConfig cfg;
    cfg.N = N;
    const PipelineReport rep = run_pipeline(cfg);
    std::printf("    {%llu, %.17g, %.17g, %.17g},\n",
                static_cast<unsigned long long>(N), rep.moment_p53, rep.moment_p52,
                rep.moment_p103);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::strcmp(argv[1], "--dump-moments") == 0) return dump_moments();
  const bool snapshots_ready = kMomentSnapshots[0].p52 != 0.0;

  criterion_1();
  const auto [rep_1e4_z3, rep_1e4_wide] = criterion_2();
  criterion_3();
  criterion_4();

  // Pipeline runs reused across criteria 5, 6, 8, 10, 12.
  std::vector<NamedRun> runs;
  runs.push_back({"N=1e4,z=3,delta=eps=0.1", rep_1e4_z3});
  runs.push_back({"N=1e4,delta=0.5", rep_1e4_wide});

  PipelineConfig base;
  base.N = 10'000;
  runs.push_back({"N=1e4,defaults", run_pipeline(base)});
  const std::size_t snap_1e4 = runs.size() - 1;

  base.N = 100'000;
  runs.push_back({"N=1e5,defaults", run_pipeline(base)});
  const std::size_t snap_1e5 = runs.size() - 1;

  base.N = 1'000'000;
  const auto t_big = std::chrono::steady_clock::now();
  const PipelineReport big = run_pipeline(base);
  const double big_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_big).count();
  runs.push_back({"N=1e6,defaults", big});
  const std::size_t snap_1e6 = runs.size() - 1;

  PipelineConfig rnd;
  rnd.N = 10'000;
  rnd.z_override = 3.0;
  rnd.subset = SubsetKind::random_density;
  rnd.density = 0.5;
  rnd.seed = 42;
  runs.push_back({"N=1e4,random(0.5)", run_pipeline(rnd)});

  PipelineConfig apf;
  apf.N = 10'000;
  apf.z_override = 3.0;
  apf.subset = SubsetKind::behrend_apfree;
  runs.push_back({"N=1e4,apfree", run_pipeline(apf)});

  PipelineConfig res;
  res.N = 10'000;
  res.z_override = 3.0;
  res.subset = SubsetKind::residue_class;
  runs.push_back({"N=1e4,residue(1 mod 4)", run_pipeline(res)});

  per_run_criteria(runs);
  criterion_7();
  criterion_9();

  criterion_10({&runs[snap_1e4].rep, &runs[snap_1e5].rep, &runs[snap_1e6].rep}, runs,
               snapshots_ready);
  if (!snapshots_ready)
    std::cout << "[NOTE] moment snapshots not pinned yet; run --dump-moments\n";

  criterion_11();
  criterion_12(big_secs, big);

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT")
            << " (" << g_failures << " failing)\n";
  return g_failures;
}
