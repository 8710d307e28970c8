#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace abound {

struct NelderMeadOptions {
  int max_iters = 2000;
  double initial_step = 0.5;
  // Stop when the simplex's value spread and diameter both fall below these.
  double f_tol = 1e-12;
  double x_tol = 1e-10;
  // Rebuild the simplex around the best vertex after it collapses, until
  // a rebuild stops improving or the iteration budget runs out.
  bool restart_on_collapse = true;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
};

/// Minimizes f from x0 with dimension-adaptive coefficients
/// (reflection 1, expansion 1 + 2/n, contraction 0.75 - 1/(2n),
/// shrink 1 - 1/n).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts = {});

}  // namespace abound
