#include "rothlab/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "chunked.hpp"
#include "rothlab/errors.hpp"
#include "rothlab/primes.hpp"

namespace rothlab {

ExtractionResult extract_dense(const CyclicFunction& a1, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw parameter_error("extract_dense: alpha must lie in (0, 1]");
  for (double v : a1.values)
    if (v < 0.0) throw parameter_error("extract_dense: a1 must be nonnegative");
  const double n = static_cast<double>(a1.modulus);
  ExtractionResult out;
  out.alpha = alpha;
  const double threshold = alpha / (2.0 * n);
  for (std::uint64_t i = 0; i < a1.modulus; ++i)
    if (a1.values[i] >= threshold) out.members.push_back(i);
  out.c = n * a1.l2_norm_sq();
  out.guaranteed_size = (out.c > 0.0) ? alpha * alpha * n / (4.0 * out.c) : 0.0;
  out.hypothesis_met = a1.l1_norm() >= alpha;
  out.guarantee_holds =
      !out.hypothesis_met ||
      static_cast<double>(out.members.size()) >= out.guaranteed_size;
  return out;
}

ThreeAPCount count_3aps(std::span<const std::uint64_t> members, std::uint64_t Nprime) {
  if (!is_prime(Nprime)) throw parameter_error("count_3aps: modulus must be prime");
  ThreeAPCount out;
  out.trivial = members.size();
  if (members.empty()) return out;
  std::vector<std::uint8_t> in(Nprime, 0);
  for (std::uint64_t m : members) {
    if (m >= Nprime) throw input_error("count_3aps: member out of range");
    in[m] = 1;
  }
  // Each ordered pair (n1, n3), n1 != n3, is one (m, d != 0) candidate; it
  // counts iff the midpoint (n1 + n3) / 2 mod N' is a member.
  const std::uint64_t inv2 = (Nprime + 1) / 2;
  const std::uint64_t k = members.size();
  std::vector<std::uint64_t> partial(detail::kChunks, 0);
  detail::chunked_for_indexed(k, [&](std::size_t chunk, std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t acc = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint64_t n1 = members[i];
      for (std::uint64_t j = 0; j < k; ++j) {
        if (i == j) continue;
        const std::uint64_t mid = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(n1 + members[j]) * inv2) % Nprime);
        acc += in[mid];
      }
    }
    partial[chunk] += acc;
  });
  for (std::uint64_t p : partial) out.nontrivial += p;
  return out;
}

double varnavides_bound(double eta, std::uint64_t Nprime, double c0, double c1) {
  if (!(eta > 0.0 && eta <= 1.0)) throw parameter_error("varnavides_bound: eta in (0,1]");
  if (!(c0 > 0.0 && c1 > 0.0)) throw parameter_error("varnavides_bound: constants > 0");
  const double n = static_cast<double>(Nprime);
  const double log_inv = std::log(1.0 / eta);
  const double denom = c0 * std::exp(c1 * std::pow(eta, -1.5) * log_inv * log_inv * log_inv);
  return eta * n * n / denom;
}

bool subprogression_identity(std::span<const std::uint64_t> members, std::uint64_t d,
                             std::uint64_t L, std::uint64_t Nprime) {
  if (d == 0 || d >= Nprime) throw parameter_error("subprogression_identity: d != 0 mod N'");
  if (L < 1 || L > Nprime) throw parameter_error("subprogression_identity: L in [1, N']");
  std::vector<std::uint8_t> in(Nprime, 0);
  for (std::uint64_t m : members) in[m % Nprime] = 1;
  std::uint64_t total = 0;
  for (std::uint64_t a = 0; a < Nprime; ++a) {
    std::uint64_t x = a;
    for (std::uint64_t i = 1; i <= L; ++i) {
      x += d;
      if (x >= Nprime) x -= Nprime;
      total += in[x];
    }
  }
  return total == L * members.size();
}

ParameterChoice choose_parameters(double alpha, std::uint64_t N,
                                  const PipelineConstants& constants) {
  return choose_parameters_logN(alpha, std::log(static_cast<double>(N)), constants);
}

ParameterChoice choose_parameters_logN(double alpha, double log_N,
                                       const PipelineConstants& constants) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw parameter_error("choose_parameters: alpha must lie in (0, 1]");
  if (!(constants.c4 > 0.0 && constants.c5 > 0.0))
    throw parameter_error("choose_parameters: c4, c5 must be positive");
  ParameterChoice out;
  out.alpha = alpha;
  out.constants = constants;
  const double log_inv = std::log(1.0 / alpha);
  const double value = (1.0 / constants.c4) *
                       std::exp(-constants.c5 * std::pow(alpha, -3.0) *
                                log_inv * log_inv * log_inv);
  out.delta = value;
  out.epsilon = value;
  if (out.epsilon >= 0.25) {
    out.epsilon = std::nextafter(0.25, 0.0);
    out.delta = out.epsilon;
    out.clamped = true;
  }
  out.side_condition_ok =
      std::abs(std::log(out.epsilon)) * std::pow(out.delta, -2.5) <= log_N / 2.0;
  return out;
}

SelfCountCheck apfree_selfcount(const CyclicFunction& a, const ReducedSet& A0) {
  const std::uint64_t n = a.modulus;
  if (n != A0.params.Nprime)
    throw input_error("apfree_selfcount: function and set moduli differ");
  SelfCountCheck out;
  out.ap_free = count_3aps(A0.residues, n).nontrivial == 0;
  out.triple_sum = triple_sum_direct(a, a, a);
  // Same chunk grid and accumulation order as the triple sum, so the two
  // sides are comparable bit for bit.
  out.cube_sum = detail::chunked_sum(n, [&](std::uint64_t lo, std::uint64_t hi) {
    double acc = 0.0;
    for (std::uint64_t m = lo; m < hi; ++m) acc += a.values[m] * a.values[m] * a.values[m];
    return acc;
  });
  out.equal = out.cube_sum == out.triple_sum;
  if (out.ap_free && !out.equal)
    throw consistency_error("apfree_selfcount: diagonal identity failed on an AP-free set");
  return out;
}

double theorem_threshold(double N, double C) {
  const double e_to_e = std::exp(std::exp(1.0));
  if (!(N > e_to_e)) throw parameter_error("theorem_threshold: N must exceed e^e");
  return theorem_threshold_from_loglog(std::log(std::log(N)), C);
}

double theorem_threshold_from_loglog(double loglogN, double C) {
  if (!(loglogN > 1.0))
    throw parameter_error("theorem_threshold: lnln N must exceed 1");
  return C * std::log(loglogN) / std::cbrt(loglogN);
}

std::vector<std::uint64_t> greedy_apfree_subset(std::span<const std::uint64_t> candidates) {
  std::vector<std::uint64_t> kept;
  std::unordered_set<std::uint64_t> in;
  for (std::uint64_t c : candidates) {
    bool ok = true;
    // c would be the largest element: reject if 2b - a == c for kept a < b.
    for (std::uint64_t b : kept) {
      if (2 * b > c && in.count(2 * b - c)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      kept.push_back(c);
      in.insert(c);
    }
  }
  return kept;
}

}  // namespace rothlab
