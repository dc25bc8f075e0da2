#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rothlab/cyclic.hpp"
#include "rothlab/wtrick.hpp"

namespace rothlab {

// Level set {n : a1(n) >= alpha / (2 N')} with the measured second moment.
struct ExtractionResult {
  std::vector<std::uint64_t> members;
  double alpha = 0.0;
  double c = 0.0;               // N' ||a1||_2^2, measured
  double guaranteed_size = 0.0;  // alpha^2 N' / (4c)
  bool hypothesis_met = false;   // ||a1||_1 >= alpha
  bool guarantee_holds = false;  // |members| >= guaranteed_size (when hypothesis_met)
};

ExtractionResult extract_dense(const CyclicFunction& a1, double alpha);

struct ThreeAPCount {
  std::uint64_t nontrivial = 0;  // ordered (m, d) pairs with d != 0
  std::uint64_t trivial = 0;     // |members|
};

// Exact enumeration over (n1, n3) pairs with midpoint test, N' prime.
ThreeAPCount count_3aps(std::span<const std::uint64_t> members, std::uint64_t Nprime);

// eta N'^2 / (c0 exp(c1 eta^{-3/2} ln(1/eta)^3)), plain formula evaluation.
double varnavides_bound(double eta, std::uint64_t Nprime, double c0, double c1);

// Checks sum_a |S_{a,d} ∩ members| == L |members| for S_{a,d} = {a+d,...,a+Ld}.
bool subprogression_identity(std::span<const std::uint64_t> members, std::uint64_t d,
                             std::uint64_t L, std::uint64_t Nprime);

struct PipelineConstants {
  double c0 = 1.0, c1 = 1.0, c2 = 1.0, c3 = 1.0, c4 = 1.0, c5 = 1.0;

  friend bool operator==(const PipelineConstants&, const PipelineConstants&) = default;
};

struct ParameterChoice {
  double alpha = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
  PipelineConstants constants;
  bool side_condition_ok = false;  // |ln eps| delta^{-5/2} <= (ln N)/2
  bool clamped = false;            // epsilon was pulled below 1/4
};

// delta = epsilon = (1/c4) exp(-c5 alpha^{-3} ln(1/alpha)^3), epsilon clamped
// into (0, 1/4).
ParameterChoice choose_parameters(double alpha, std::uint64_t N,
                                  const PipelineConstants& constants);
ParameterChoice choose_parameters_logN(double alpha, double log_N,
                                       const PipelineConstants& constants);

struct SelfCountCheck {
  double cube_sum = 0.0;    // sum_m a(m)^3, accumulated on the triple-sum grid
  double triple_sum = 0.0;  // triple_sum_direct(a, a, a)
  bool ap_free = false;     // A0 has no nontrivial 3AP mod N'
  bool equal = false;       // bitwise, meaningful when ap_free
};

// When the support has no nontrivial 3AP, the AP-weighted cube collapses to
// the diagonal; verified with identical summation order on both sides.
SelfCountCheck apfree_selfcount(const CyclicFunction& a, const ReducedSet& A0);

// C * lnlnln(N) / (lnln N)^{1/3}; N must exceed e^e.
double theorem_threshold(double N, double C);
double theorem_threshold_from_loglog(double loglogN, double C);

// Greedy progression-free filter: keeps a candidate unless it completes an
// integer 3AP with two kept elements. Candidates must be sorted ascending.
std::vector<std::uint64_t> greedy_apfree_subset(std::span<const std::uint64_t> candidates);

}  // namespace rothlab
