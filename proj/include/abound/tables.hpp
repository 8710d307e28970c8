#pragma once

#include <vector>

#include "abound/optimizer.hpp"

namespace abound {

// Published vertex bounds for k = 4..10 at mu_1 <= z.
struct ReferenceCell {
  int k;
  double z;
  long value;
};

const std::vector<ReferenceCell>& reference_cells();

struct CellCheck {
  ReferenceCell cell;
  std::optional<BoundCertificate> best;
  std::vector<std::string> errors;
  double allowed = 0.0;  // value for z <= 1, 1.15 * value for z = 2
  bool pass = false;
};

/// The tolerance policy: integer bound <= value when z <= 1, real bound
/// <= 1.15 * value otherwise.
double allowed_bound(const ReferenceCell& cell);

/// table_bounds over every reference cell with k in [k_lo, k_hi].
std::vector<CellCheck> verify_reference_tables(int k_lo, int k_hi, const OptimizerConfig& cfg);

}  // namespace abound
