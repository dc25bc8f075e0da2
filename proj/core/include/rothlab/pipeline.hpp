#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rothlab/cyclic.hpp"
#include "rothlab/density.hpp"
#include "rothlab/primes.hpp"
#include "rothlab/wtrick.hpp"

namespace rothlab {

enum class SubsetKind { all_primes, random_density, residue_class, behrend_apfree, file };

SubsetKind subset_kind_from_string(const std::string& s);
std::string to_string(SubsetKind k);

struct PipelineConfig {
  std::uint64_t N = 10'000;
  std::optional<double> z_override;
  SubsetKind subset = SubsetKind::all_primes;
  double density = 1.0;       // keep probability for random_density
  std::uint64_t seed = 1;
  std::optional<double> delta;
  std::optional<double> epsilon;
  PipelineConstants constants;
  std::uint64_t sample_pairs = 10'000;
  std::uint64_t residue_mod = 4;   // for residue_class subsets
  std::uint64_t residue_cls = 1;
  std::string subset_file;         // for SubsetKind::file
  double spectral_rel_tol = 1e-6;
  double l2_rel_tol = 1e-9;

  double effective_z() const;
  double effective_delta() const { return delta.value_or(0.05); }
  double effective_epsilon() const { return epsilon.value_or(0.05); }
};

struct StageTiming {
  std::string stage;
  double ms = 0.0;

  friend bool operator==(const StageTiming&, const StageTiming&) = default;
};

// Everything a run measures. Verdict strings are "holds", "fails", or
// "hypothesis-not-met".
struct PipelineReport {
  std::uint64_t N = 0;
  double z = 0.0;
  std::uint64_t M = 0;
  std::uint64_t Nprime = 0;
  std::uint64_t b = 0;
  std::uint64_t A_size = 0;
  double alpha_measured = 0.0;
  std::uint64_t A0_size = 0;
  double a_l1 = 0.0;
  double moment_p53 = 0.0;
  double moment_p52 = 0.0;
  double moment_p103 = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
  std::uint64_t spectrum_size = 0;
  double spectrum_bound = 0.0;
  std::string spectrum_certificate;
  std::uint64_t bohr_size = 0;
  double pigeonhole_bound = 0.0;
  std::string pigeonhole_verdict;
  double bohr_condition_rhs = 0.0;  // ln N / ln z, compared against |B|
  std::string bohr_condition;
  double kernel_deviation_value = 0.0;
  double kernel_deviation_cap = 0.0;  // 30 epsilon
  std::string kernel_deviation_verdict;
  double a1_l1 = 0.0;
  std::string l1_preservation;
  double delta_direct = 0.0;
  double delta_fourier = 0.0;
  double delta_ratio = 0.0;  // delta_fourier / (epsilon + delta)
  std::string delta_consistency;
  double holder_lhs = 0.0;
  double holder_rhs = 0.0;
  std::string holder_verdict;
  std::string majorant_domination;
  double a1_l2sq_times_Nprime = 0.0;
  double l2_lhs = 0.0;
  double l2_mid = 0.0;
  double l2_rhs = 0.0;
  double l2_rhs_sq_times_Nprime = 0.0;
  std::string l2_chain;
  double pair_ratio_max = 0.0;
  double pair_ratio_diagonal = 0.0;
  std::uint64_t pair_samples = 0;
  std::uint64_t Aprime_size = 0;
  double eta = 0.0;
  double extraction_guarantee = 0.0;
  std::string extraction_verdict;
  std::uint64_t ap3_nontrivial = 0;
  std::uint64_t ap3_trivial = 0;
  std::uint64_t ap3_a0_nontrivial = 0;
  std::uint64_t ap3_a0_trivial = 0;
  double varnavides_value = 0.0;
  std::string selfcount_verdict;
  double final_lhs = 0.0;
  double final_rhs = 0.0;
  std::string final_winner;
  std::string overall;
  std::vector<StageTiming> timings;

  friend bool operator==(const PipelineReport&, const PipelineReport&) = default;
};

// Materialize the configured subset of primes <= N, sorted ascending.
std::vector<std::uint64_t> generate_subset(const PipelineConfig& config);
std::vector<std::uint64_t> generate_subset(const PipelineConfig& config,
                                           const PrimeTable& table);

// Newline-delimited integers, '#' starts a comment. Every value must be a
// prime <= N; violations raise input_error naming the line.
std::vector<std::uint64_t> parse_set_file(const std::string& path,
                                          const PrimeTable& table);

PipelineReport run_pipeline(const PipelineConfig& config);

// The shared preamble of every subcommand: subset, reduction frame, and the
// normalized indicator on Z/N'Z.
struct Frame {
  WTrickParams params;
  std::uint64_t b = 0;
  ReducedSet A0;
  CyclicFunction a;
};

Frame build_frame(const PipelineConfig& config);

}  // namespace rothlab
