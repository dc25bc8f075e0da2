#include "rothlab/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "rothlab/bohr.hpp"
#include "rothlab/correlation.hpp"
#include "rothlab/errors.hpp"

namespace rothlab {

namespace {

constexpr const char* kHolds = "holds";
constexpr const char* kFails = "fails";
constexpr const char* kNotMet = "hypothesis-not-met";

// Times each stage; failures propagate with the stage name prepended and the
// error type preserved for the rothlab hierarchy.
class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& sink) : sink_(sink) {}

  template <typename Fn>
  auto run(const std::string& stage, Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      if constexpr (std::is_void_v<decltype(fn())>) {
        fn();
        record(stage, t0);
      } else {
        auto result = fn();
        record(stage, t0);
        return result;
      }
    } catch (const capacity_error& e) {
      record(stage, t0);
      throw capacity_error(stage + ": " + e.what());
    } catch (const parameter_error& e) {
      record(stage, t0);
      throw parameter_error(stage + ": " + e.what());
    } catch (const input_error& e) {
      record(stage, t0);
      throw input_error(stage + ": " + e.what());
    } catch (const consistency_error& e) {
      record(stage, t0);
      throw consistency_error(stage + ": " + e.what());
    } catch (const std::exception& e) {
      record(stage, t0);
      throw std::runtime_error(stage + ": " + e.what());
    }
  }

 private:
  void record(const std::string& stage, std::chrono::steady_clock::time_point t0) {
    const auto t1 = std::chrono::steady_clock::now();
    sink_.push_back({stage, std::chrono::duration<double, std::milli>(t1 - t0).count()});
  }

  std::vector<StageTiming>& sink_;
};

const char* verdict(bool ok) { return ok ? kHolds : kFails; }

}  // namespace

Frame build_frame(const PipelineConfig& config) {
  Frame f;
  const PrimeTable table = sieve_primes(config.N);
  const std::vector<std::uint64_t> A = generate_subset(config, table);
  f.params = make_params(config.N, config.effective_z());
  f.b = A.empty() ? 1 : choose_progression(A, f.params).b;
  f.A0 = A.empty() ? ReducedSet{f.params, {}} : reduce_to_cyclic(A, f.params, f.b);
  const double scale = std::log(static_cast<double>(f.params.N)) /
                       (static_cast<double>(f.params.Nprime) * std::log(f.params.z));
  f.a = CyclicFunction::zeros(f.params.Nprime);
  for (std::uint64_t n : f.A0.residues) f.a.values[n] = scale;
  return f;
}

PipelineReport run_pipeline(const PipelineConfig& config) {
  PipelineReport rep;
  StageClock clock(rep.timings);

  const PrimeTable table =
      clock.run("sieve", [&] { return sieve_primes(config.N); });

  const std::vector<std::uint64_t> A =
      clock.run("generate_subset", [&] { return generate_subset(config, table); });
  rep.N = config.N;
  rep.A_size = A.size();
  rep.alpha_measured =
      table.count() ? static_cast<double>(A.size()) / static_cast<double>(table.count())
                    : 0.0;

  const WTrickParams params =
      clock.run("make_params", [&] { return make_params(config.N, config.effective_z()); });
  rep.z = params.z;
  rep.M = params.M;
  rep.Nprime = params.Nprime;

  // b = 1 is the deterministic fallback when the subset is empty.
  const std::uint64_t b = clock.run("choose_progression", [&] {
    return A.empty() ? std::uint64_t{1} : choose_progression(A, params).b;
  });
  rep.b = b;

  const ReducedSet A0 = clock.run("reduce_to_cyclic", [&] {
    return A.empty() ? ReducedSet{params, {}} : reduce_to_cyclic(A, params, b);
  });
  rep.A0_size = A0.residues.size();

  const double scale = std::log(static_cast<double>(params.N)) /
                       (static_cast<double>(params.Nprime) * std::log(params.z));
  const CyclicFunction a = clock.run("normalized_indicator", [&] {
    CyclicFunction f = CyclicFunction::zeros(params.Nprime);
    for (std::uint64_t n : A0.residues) f.values[n] = scale;
    return f;
  });
  rep.a_l1 = a.l1_norm();

  const ComplexCyclicFunction ahat = clock.run("dft", [&] { return dft(a); });
  rep.moment_p53 = lp_moment(ahat, 5.0 / 3.0);
  rep.moment_p52 = lp_moment(ahat, 2.5);
  rep.moment_p103 = lp_moment(ahat, 10.0 / 3.0);

  rep.delta = config.effective_delta();
  rep.epsilon = config.effective_epsilon();

  const Spectrum R =
      clock.run("large_spectrum", [&] { return large_spectrum(ahat, rep.delta); });
  rep.spectrum_size = R.members.size();
  const SpectrumCertificate scert = spectrum_size_certificate(ahat, rep.delta);
  rep.spectrum_bound = scert.bound;
  rep.spectrum_certificate = verdict(scert.holds);

  const HolderChain hc = holder_chain(ahat);
  rep.holder_lhs = hc.lhs;
  rep.holder_rhs = hc.rhs;
  rep.holder_verdict = verdict(hc.holds);

  const BohrSet B =
      clock.run("bohr_set", [&] { return bohr_set(R, rep.epsilon, params.Nprime); });
  rep.bohr_size = B.members.size();
  rep.pigeonhole_bound = bohr_pigeonhole_bound(params.Nprime, rep.epsilon, R.members.size());
  rep.pigeonhole_verdict = verdict(
      bohr_size_certified(B.members.size(), params.Nprime, rep.epsilon, R.members.size()));
  rep.bohr_condition_rhs = std::log(static_cast<double>(params.N)) / std::log(params.z);
  rep.bohr_condition =
      verdict(static_cast<double>(B.members.size()) >= rep.bohr_condition_rhs);

  const SmoothingKernel kernel = clock.run("kernel", [&] { return make_kernel(B); });
  rep.kernel_deviation_value = kernel_deviation(kernel, R);
  rep.kernel_deviation_cap = 30.0 * rep.epsilon;
  rep.kernel_deviation_verdict =
      (rep.epsilon <= 0.05)
          ? verdict(rep.kernel_deviation_value <= rep.kernel_deviation_cap)
          : (rep.kernel_deviation_value <= rep.kernel_deviation_cap ? kHolds : kNotMet);

  const CyclicFunction a1 = clock.run("smooth", [&] { return smooth(a, kernel); });
  rep.a1_l1 = a1.l1_norm();
  rep.l1_preservation = verdict(
      std::abs(rep.a1_l1 - rep.a_l1) <= 1e-9 * std::max({rep.a_l1, rep.a1_l1, 1e-300}));

  clock.run("delta_discrepancy", [&] {
    try {
      const Discrepancy d = delta_discrepancy(a, a1, config.spectral_rel_tol);
      rep.delta_direct = d.direct;
      rep.delta_fourier = d.fourier;
      rep.delta_consistency = kHolds;
    } catch (const consistency_error&) {
      const double n = static_cast<double>(params.Nprime);
      rep.delta_direct =
          n * std::abs(triple_sum_direct(a, a, a) - triple_sum_direct(a1, a1, a1));
      rep.delta_fourier =
          n * std::abs(triple_sum_fourier(a, a, a) - triple_sum_fourier(a1, a1, a1));
      rep.delta_consistency = kFails;
    }
  });
  rep.delta_ratio = rep.delta_fourier / (rep.epsilon + rep.delta);

  const PrimeMajorant lambda =
      clock.run("prime_majorant", [&] { return prime_majorant(params, b); });
  bool dominated = true;
  for (std::uint64_t n : A0.residues)
    if (!lambda.prime_flag[n - 1]) dominated = false;
  rep.majorant_domination = verdict(dominated);

  const L2Certificate cert = clock.run("l2_certificate", [&] {
    return l2_certificate(a, a1, lambda, kernel, config.l2_rel_tol);
  });
  rep.a1_l2sq_times_Nprime = static_cast<double>(params.Nprime) * a1.l2_norm_sq();
  rep.l2_lhs = cert.lhs;
  rep.l2_mid = cert.mid;
  rep.l2_rhs = cert.rhs;
  rep.l2_rhs_sq_times_Nprime = cert.rhs_sq_times_Nprime;
  rep.l2_chain = verdict(cert.lhs_equals_mid && cert.mid_le_rhs);

  clock.run("pair_correlation", [&] {
    rep.pair_ratio_diagonal =
        pair_correlation(lambda, 0, 0) / pair_correlation_bound(0, 0, params);
    const std::vector<PairSample> samples = sample_pair_correlations(
        lambda, lift_kernel(kernel), config.sample_pairs,
        config.seed ^ 0x9e3779b97f4a7c15ULL);
    double worst = 0.0;
    for (const PairSample& s : samples) worst = std::max(worst, s.ratio);
    rep.pair_ratio_max = worst;
    rep.pair_samples = samples.size();
  });

  clock.run("extract_dense", [&] {
    if (rep.alpha_measured <= 0.0) {
      rep.extraction_verdict = kNotMet;
      rep.varnavides_value = 0.0;
      return;
    }
    const ExtractionResult ex = extract_dense(a1, rep.alpha_measured);
    rep.Aprime_size = ex.members.size();
    rep.eta = static_cast<double>(ex.members.size()) / static_cast<double>(params.Nprime);
    rep.extraction_guarantee = ex.guaranteed_size;
    rep.extraction_verdict = ex.hypothesis_met ? verdict(ex.guarantee_holds) : kNotMet;
    const ThreeAPCount counts = count_3aps(ex.members, params.Nprime);
    rep.ap3_nontrivial = counts.nontrivial;
    rep.ap3_trivial = counts.trivial;
    rep.varnavides_value = (rep.eta > 0.0)
                               ? varnavides_bound(rep.eta, params.Nprime,
                                                  config.constants.c0, config.constants.c1)
                               : 0.0;
  });

  clock.run("count_3aps_a0", [&] {
    const ThreeAPCount counts = count_3aps(A0.residues, params.Nprime);
    rep.ap3_a0_nontrivial = counts.nontrivial;
    rep.ap3_a0_trivial = counts.trivial;
    if (counts.nontrivial == 0 && !A0.residues.empty()) {
      try {
        const SelfCountCheck sc = apfree_selfcount(a, A0);
        rep.selfcount_verdict = verdict(sc.equal);
      } catch (const consistency_error&) {
        rep.selfcount_verdict = kFails;
      }
    } else {
      rep.selfcount_verdict = kNotMet;
    }
  });

  clock.run("final_inequality", [&] {
    const double alpha = rep.alpha_measured;
    if (alpha <= 0.0) {
      rep.final_lhs = 0.0;
    } else {
      const double li = std::log(1.0 / alpha);
      rep.final_lhs = 1.0 / (config.constants.c2 *
                             std::exp(config.constants.c3 * std::pow(alpha, -3.0) *
                                      li * li * li));
    }
    const double logn_logz = std::log(static_cast<double>(params.N)) / std::log(params.z);
    rep.final_rhs = rep.epsilon + rep.delta +
                    logn_logz * logn_logz / static_cast<double>(params.Nprime);
    rep.final_winner = rep.final_lhs > rep.final_rhs ? "lhs" : "rhs";
  });

  const bool hard_ok =
      rep.spectrum_certificate == kHolds && rep.holder_verdict == kHolds &&
      rep.pigeonhole_verdict == kHolds && rep.l1_preservation == kHolds &&
      rep.delta_consistency == kHolds && rep.majorant_domination == kHolds &&
      rep.l2_chain == kHolds && rep.kernel_deviation_verdict != kFails &&
      rep.extraction_verdict != kFails && rep.selfcount_verdict != kFails;
  rep.overall = verdict(hard_ok);
  return rep;
}

}  // namespace rothlab
