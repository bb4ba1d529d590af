#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "exsplice/dataset.hpp"

namespace exsplice {

/// Convolution-model parameters: observed = signal + noise with
/// signal ~ Exp(alpha) and noise ~ N(mu, sigma^2), both nonnegative.
struct BgParams {
  double mu = 0.0;
  double sigma = 1.0;
  double alpha = 1.0;
};

/// Estimates BgParams from one array's linear intensities:
///   mu    = mode of a Gaussian-kernel density estimate (Silverman bandwidth,
///           512-point grid over the data range)
///   sigma = sqrt(mean((x - mu)^2 for x < mu)) * sqrt(2)
///   alpha = 1 / mean(x - mu for x > mu)
/// Requires >= 100 strictly positive values.
BgParams estimate_bg_params(std::span<const double> column);

/// Posterior mean E[signal | observed = x]: with a = x - mu - sigma^2*alpha
/// and b = sigma,
///   out = a + b * (phi(a/b) - phi((x-a)/b)) / (Phi(a/b) + Phi((x-a)/b) - 1).
/// Strictly increasing in x, always positive. When the denominator drops
/// below 1e-300 the value falls back to max(x - mu, 1e-8) and
/// *underflow_count is bumped.
std::vector<double> background_correct(std::span<const double> column, const BgParams& params,
                                       std::size_t* underflow_count = nullptr);

double background_correct_value(double x, const BgParams& params,
                                std::size_t* underflow_count = nullptr);

/// Per-column estimate + correct over a raw linear matrix; stage becomes
/// bg_corrected. Columns are independent; threads > 1 splits them.
IntensityMatrix background_correct_matrix(const IntensityMatrix& matrix, int threads = 1);

}  // namespace exsplice
