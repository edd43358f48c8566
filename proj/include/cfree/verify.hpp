#pragma once

#include "cfree/io.hpp"

namespace cfree {

struct VerifyConfig {
  int d = 2;
  int truncation = 5;
  int trials = 10;
  uint64_t seed = 1;
  double tolerance = 1e-9;
  bool exact_fock = false;  // also run the small operator models in exact mode
};

std::vector<std::string> suite_names();

/// Runs one of the named verification suites (or "all") and collects one
/// record per trial and identity; every exact identity is checked to
/// equality, float checks against config.tolerance.
ReportDocument run_suite(const std::string& name, const VerifyConfig& config);

}  // namespace cfree
