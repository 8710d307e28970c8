#pragma once

// Search for good N-term certificates f = sum_{j=1}^N alpha_j V_j.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abound/bound_core.hpp"

namespace abound {

struct OptimizerConfig {
  int terms = 5;
  int restarts = 64;
  std::uint64_t seed = 0;
  int max_iters = 2000;
  double feasibility_margin = 1e-9;
  // 0 means std::thread::hardware_concurrency().  The result does not depend
  // on this value.
  int threads = 0;

  /// Throws std::invalid_argument on terms < 1, restarts < 1, max_iters < 1
  /// or a negative margin.
  void validate() const;
};

/// Best certificate over all restarts; alpha_j >= 0 with unit norm and
/// sup_{I1} f <= -feasibility_margin.  Deterministic in cfg.seed.  Throws
/// NoFeasiblePoint when no restart reaches a feasible f.
BoundCertificate optimize_nterm(int k, double z, const OptimizerConfig& cfg);

struct TableEntry {
  double z = 0.0;
  std::optional<BoundCertificate> best;
  // "method: message" for every method that failed or did not apply.
  std::vector<std::string> errors;
};

/// One entry per z: the minimum over the linear, two-term, machine and
/// N-term bounds that apply.  Errors are collected per entry.
std::vector<TableEntry> table_bounds(int k, const std::vector<double>& z_list,
                                     const OptimizerConfig& cfg);

}  // namespace abound
