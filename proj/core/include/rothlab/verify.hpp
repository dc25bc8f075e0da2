#pragma once

#include <string>
#include <vector>

#include "rothlab/pipeline.hpp"

namespace rothlab {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifySummary {
  std::vector<VerifyCheck> checks;

  bool all_pass() const;
  std::size_t failures() const;
};

// Fault-injection switches for exercising the harness itself.
struct VerifyHooks {
  bool corrupt_transform = false;
};

// Runs every module's invariants at small sizes (direct oracles engaged).
VerifySummary verify_suite(const PipelineConfig& config, const VerifyHooks& hooks = {});

}  // namespace rothlab
