#pragma once

#include <stdexcept>
#include <string>

namespace rothlab {

// Input exceeds what the implementation can hold (sieve limit, u64 overflow).
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A caller-supplied parameter violates a documented precondition.
struct parameter_error : std::invalid_argument {
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or inconsistent input data (files, mismatched moduli, provenance).
struct input_error : std::invalid_argument {
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Two routes that must agree did not; signals a bug or corrupted state.
struct consistency_error : std::logic_error {
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rothlab
