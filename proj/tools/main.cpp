#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rothlab/bohr.hpp"
#include "rothlab/correlation.hpp"
#include "rothlab/cyclic.hpp"
#include "rothlab/density.hpp"
#include "rothlab/pipeline.hpp"
#include "rothlab/report_io.hpp"
#include "rothlab/verify.hpp"

namespace {

struct CommonOpts {
  rothlab::PipelineConfig config;
  std::string subset = "all_primes";
  double z = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
  std::string out;
  std::string format = "json";

  void resolve() {
    config.subset = rothlab::subset_kind_from_string(subset);
    if (z > 0.0) config.z_override = z;
    if (delta > 0.0) config.delta = delta;
    if (epsilon > 0.0) config.epsilon = epsilon;
  }
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--n", o.config.N, "Ambient bound N")->capture_default_str();
  cmd->add_option("--z", o.z, "Sieve level override (default: 5 for N <= 1e7)");
  cmd->add_option("--subset", o.subset,
                  "all_primes|random_density|residue_class|behrend_apfree|file")
      ->capture_default_str();
  cmd->add_option("--density", o.config.density, "Keep probability for random_density")
      ->capture_default_str();
  cmd->add_option("--seed", o.config.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--delta", o.delta, "Spectrum threshold (default 0.05)");
  cmd->add_option("--epsilon", o.epsilon, "Bohr width (default 0.05)");
  cmd->add_option("--out", o.out, "Output path (default stdout)");
  cmd->add_option("--format", o.format, "json|csv")->capture_default_str();
  cmd->add_option("--sample-pairs", o.config.sample_pairs,
                  "Pair-correlation sample count")
      ->capture_default_str();
  cmd->add_option("--set", o.config.subset_file, "Set file for --subset file");
  cmd->add_option("--residue-mod", o.config.residue_mod,
                  "Modulus for residue_class subsets")
      ->capture_default_str();
  cmd->add_option("--residue-class", o.config.residue_cls,
                  "Class for residue_class subsets")
      ->capture_default_str();
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

int cmd_pipeline(CommonOpts& o) {
  o.resolve();
  const rothlab::PipelineReport rep = rothlab::run_pipeline(o.config);
  std::ofstream file;
  std::ostream& out = open_sink(o.out, file);
  if (o.format == "csv")
    out << rothlab::report_to_csv(rep);
  else
    out << rothlab::report_to_json(rep) << "\n";
  std::cerr << "pipeline: N=" << rep.N << " N'=" << rep.Nprime << " |A0|=" << rep.A0_size
            << " r=" << rep.spectrum_size << " |B|=" << rep.bohr_size
            << " delta_ratio=" << rep.delta_ratio << " overall=" << rep.overall << "\n";
  return rep.overall == "holds" ? 0 : 1;
}

int cmd_spectrum(CommonOpts& o) {
  o.resolve();
  const rothlab::Frame f = rothlab::build_frame(o.config);
  const rothlab::ComplexCyclicFunction fhat = rothlab::dft(f.a);
  std::ofstream file;
  std::ostream& out = open_sink(o.out, file);
  rothlab::write_spectrum_csv(out, fhat);
  return 0;
}

int cmd_bohr(CommonOpts& o, const std::string& dump_path) {
  o.resolve();
  const rothlab::Frame f = rothlab::build_frame(o.config);
  const rothlab::ComplexCyclicFunction fhat = rothlab::dft(f.a);
  const double delta = o.config.effective_delta();
  const double epsilon = o.config.effective_epsilon();
  const rothlab::Spectrum R = rothlab::large_spectrum(fhat, delta);
  const rothlab::BohrSet B = rothlab::bohr_set(R, epsilon, f.params.Nprime);
  const rothlab::SmoothingKernel kernel = rothlab::make_kernel(B);
  std::ofstream file;
  std::ostream& out = open_sink(o.out, file);
  out << "Nprime " << f.params.Nprime << "\n"
      << "r " << R.members.size() << "\n"
      << "bohr_size " << B.members.size() << "\n"
      << "pigeonhole_bound "
      << rothlab::bohr_pigeonhole_bound(f.params.Nprime, epsilon, R.members.size()) << "\n"
      << "kernel_deviation " << rothlab::kernel_deviation(kernel, R) << "\n";
  if (!dump_path.empty()) {
    std::ofstream dump(dump_path);
    if (!dump) throw std::runtime_error("cannot open member dump: " + dump_path);
    for (std::uint64_t m : B.members) dump << m << "\n";
  }
  return 0;
}

int cmd_correlate(CommonOpts& o) {
  o.resolve();
  const rothlab::Frame f = rothlab::build_frame(o.config);
  const rothlab::ComplexCyclicFunction fhat = rothlab::dft(f.a);
  const rothlab::Spectrum R = rothlab::large_spectrum(fhat, o.config.effective_delta());
  const rothlab::BohrSet B =
      rothlab::bohr_set(R, o.config.effective_epsilon(), f.params.Nprime);
  const rothlab::SmoothingKernel kernel = rothlab::make_kernel(B);
  const rothlab::PrimeMajorant lambda = rothlab::prime_majorant(f.params, f.b);
  const auto samples = rothlab::sample_pair_correlations(
      lambda, rothlab::lift_kernel(kernel), o.config.sample_pairs, o.config.seed);
  std::ofstream file;
  std::ostream& out = open_sink(o.out, file);
  out << "m1,m2,exact,bound,ratio\n";
  out.precision(17);
  for (const auto& s : samples)
    out << s.m1 << "," << s.m2 << "," << s.exact << "," << s.bound << "," << s.ratio
        << "\n";
  return 0;
}

int cmd_count3ap(const std::string& set_path, std::uint64_t nprime) {
  std::ifstream in(set_path);
  if (!in) {
    std::cerr << "cannot open set file: " << set_path << "\n";
    return 2;
  }
  std::vector<std::uint64_t> members;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      members.push_back(std::stoull(line));
    } catch (const std::exception&) {
      std::cerr << "set file line " << lineno << ": not an integer\n";
      return 2;
    }
    if (members.back() >= nprime) {
      std::cerr << "set file line " << lineno << ": value not a residue mod " << nprime
                << "\n";
      return 2;
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const rothlab::ThreeAPCount c = rothlab::count_3aps(members, nprime);
  std::cout << "nontrivial " << c.nontrivial << "\n" << "trivial " << c.trivial << "\n";
  return 0;
}

int cmd_verify(CommonOpts& o) {
  o.resolve();
  const rothlab::VerifySummary s = rothlab::verify_suite(o.config);
  for (const auto& c : s.checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
  }
  std::cout << s.checks.size() - s.failures() << "/" << s.checks.size() << " checks passed\n";
  return s.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computational laboratory for 3-term progressions in dense subsets of the primes"};
  app.require_subcommand(1);

  CommonOpts pipeline_opts, spectrum_opts, bohr_opts, correlate_opts, verify_opts;
  std::string bohr_dump;
  std::string count_set;
  std::uint64_t count_nprime = 0;

  auto* pipeline = app.add_subcommand("pipeline", "Full end-to-end run with JSON report");
  add_common_flags(pipeline, pipeline_opts);

  auto* spectrum = app.add_subcommand("spectrum", "CSV dump of the indicator's transform");
  add_common_flags(spectrum, spectrum_opts);

  auto* bohr = app.add_subcommand("bohr", "Bohr set size, pigeonhole bound, deviation");
  add_common_flags(bohr, bohr_opts);
  bohr->add_option("--dump-members", bohr_dump, "Write members as newline integers");

  auto* correlate = app.add_subcommand("correlate", "Sampled pair-correlation ratios (CSV)");
  add_common_flags(correlate, correlate_opts);

  auto* count3ap = app.add_subcommand("count3ap", "Count 3APs in a residue set file");
  count3ap->add_option("--set", count_set, "Newline-delimited residues")->required();
  count3ap->add_option("--nprime", count_nprime, "Prime modulus")->required();

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  add_common_flags(verify, verify_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (pipeline->parsed()) return cmd_pipeline(pipeline_opts);
    if (spectrum->parsed()) return cmd_spectrum(spectrum_opts);
    if (bohr->parsed()) return cmd_bohr(bohr_opts, bohr_dump);
    if (correlate->parsed()) return cmd_correlate(correlate_opts);
    if (count3ap->parsed()) return cmd_count3ap(count_set, count_nprime);
    if (verify->parsed()) return cmd_verify(verify_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
