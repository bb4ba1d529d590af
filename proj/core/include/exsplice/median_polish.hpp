#pragma once

#include <vector>

#include "exsplice/matrix.hpp"

namespace exsplice {

struct MedianPolishResult {
  double overall = 0.0;
  std::vector<double> row_effects;
  std::vector<double> col_effects;
  Matrix residuals;
  int iterations = 0;
  bool converged = false;
};

/// Tukey median polish of an additive two-way table. Each iteration sweeps
/// row medians into row effects, re-centres column effects on their median,
/// sweeps column medians, then re-centres row effects; stops when no effect
/// moved by tol or more within a full sweep, or after max_iter sweeps.
/// overall + row_effects + col_effects + residuals reconstructs the input.
MedianPolishResult median_polish(const Matrix& input, int max_iter = 10, double tol = 0.01);

}  // namespace exsplice
