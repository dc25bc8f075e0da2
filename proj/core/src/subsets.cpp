#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "rothlab/errors.hpp"
#include "rothlab/pipeline.hpp"

namespace rothlab {

SubsetKind subset_kind_from_string(const std::string& s) {
  if (s == "all_primes") return SubsetKind::all_primes;
  if (s == "random_density") return SubsetKind::random_density;
  if (s == "residue_class") return SubsetKind::residue_class;
  if (s == "behrend_apfree") return SubsetKind::behrend_apfree;
  if (s == "file") return SubsetKind::file;
  throw parameter_error("unknown subset kind: " + s);
}

std::string to_string(SubsetKind k) {
  switch (k) {
    case SubsetKind::all_primes: return "all_primes";
    case SubsetKind::random_density: return "random_density";
    case SubsetKind::residue_class: return "residue_class";
    case SubsetKind::behrend_apfree: return "behrend_apfree";
    case SubsetKind::file: return "file";
  }
  return "?";
}

double PipelineConfig::effective_z() const {
  if (z_override) return *z_override;
  if (N <= 10'000'000) return 5.0;
  return std::log(static_cast<double>(N)) / 3.0;
}

std::vector<std::uint64_t> generate_subset(const PipelineConfig& config) {
  return generate_subset(config, sieve_primes(config.N));
}

std::vector<std::uint64_t> generate_subset(const PipelineConfig& config,
                                           const PrimeTable& table) {
  if (config.N < 100) throw parameter_error("generate_subset: N must be >= 100");
  if (!(config.density > 0.0 && config.density <= 1.0))
    throw parameter_error("generate_subset: density must lie in (0, 1]");
  const auto& primes = table.primes();
  switch (config.subset) {
    case SubsetKind::all_primes:
      return primes;
    case SubsetKind::random_density: {
      // mt19937_64 with the canonical 53-bit mapping (x >> 11) * 2^-53, one
      // draw per prime in ascending order; documented for reimplementation.
      std::mt19937_64 rng(config.seed);
      std::vector<std::uint64_t> out;
      for (std::uint64_t p : primes) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < config.density) out.push_back(p);
      }
      return out;
    }
    case SubsetKind::residue_class: {
      if (config.residue_mod < 2)
        throw parameter_error("generate_subset: residue modulus must be >= 2");
      std::vector<std::uint64_t> out;
      for (std::uint64_t p : primes)
        if (p % config.residue_mod == config.residue_cls % config.residue_mod)
          out.push_back(p);
      return out;
    }
    case SubsetKind::behrend_apfree:
      return greedy_apfree_subset(primes);
    case SubsetKind::file:
      return parse_set_file(config.subset_file, table);
  }
  throw parameter_error("generate_subset: unhandled subset kind");
}

std::vector<std::uint64_t> parse_set_file(const std::string& path,
                                          const PrimeTable& table) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open set file: " + path);
  std::vector<std::uint64_t> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;  // blank or comment-only
    std::string rest;
    if (ss >> rest)
      throw input_error("set file line " + std::to_string(lineno) +
                        ": expected one integer per line");
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw input_error("set file line " + std::to_string(lineno) +
                        ": not an integer: " + tok);
    }
    if (value > table.limit())
      throw input_error("set file line " + std::to_string(lineno) + ": " + tok +
                        " exceeds N");
    if (!table.contains(value))
      throw input_error("set file line " + std::to_string(lineno) + ": " + tok +
                        " is not prime");
    out.push_back(value);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rothlab
