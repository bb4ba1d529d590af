#include "exsplice/background.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "exsplice/errors.hpp"
#include "exsplice/log.hpp"
#include "exsplice/mathutil.hpp"

namespace exsplice {

BgParams estimate_bg_params(std::span<const double> column) {
  if (column.size() < 100)
    fail(Errc::TooFewProbes, std::to_string(column.size()) + " values, need >= 100");

  std::vector<double> sorted(column.begin(), column.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double lo = sorted.front();
  const double hi = sorted.back();
  if (lo == hi) fail(Errc::DegenerateColumn, "all values equal");

  double mean = 0.0;
  for (double v : sorted) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : sorted) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
  double spread = sd;
  if (iqr > 0.0) spread = std::min(sd, iqr / 1.34);
  const double bandwidth =
      std::max(0.9 * spread * std::pow(static_cast<double>(n), -0.2), 1e-12);

  // KDE mode on a 512-point grid; only data within 8 bandwidths contributes.
  const int kGrid = 512;
  const double step = (hi - lo) / static_cast<double>(kGrid - 1);
  double best_x = lo;
  double best_density = -1.0;
  for (int g = 0; g < kGrid; ++g) {
    const double x = lo + step * static_cast<double>(g);
    const auto begin =
        std::lower_bound(sorted.begin(), sorted.end(), x - 8.0 * bandwidth);
    const auto end = std::upper_bound(sorted.begin(), sorted.end(), x + 8.0 * bandwidth);
    double density = 0.0;
    for (auto it = begin; it != end; ++it) density += norm_pdf((x - *it) / bandwidth);
    if (density > best_density) {
      best_density = density;
      best_x = x;
    }
  }
  const double mode = best_x;

  double below_ss = 0.0;
  std::size_t below_n = 0;
  double above_sum = 0.0;
  std::size_t above_n = 0;
  for (double v : sorted) {
    if (v < mode) {
      below_ss += (v - mode) * (v - mode);
      ++below_n;
    } else if (v > mode) {
      above_sum += v - mode;
      ++above_n;
    }
  }
  if (below_n == 0 || above_n == 0)
    fail(Errc::DegenerateColumn, "no spread on one side of the mode");

  BgParams params;
  params.mu = mode;
  params.sigma = std::sqrt(below_ss / static_cast<double>(below_n)) * std::sqrt(2.0);
  params.alpha = static_cast<double>(above_n) / above_sum;
  return params;
}

double background_correct_value(double x, const BgParams& params,
                                std::size_t* underflow_count) {
  const double b = params.sigma;
  const double a = x - params.mu - params.sigma * params.sigma * params.alpha;
  const double za = a / b;
  const double zx = (x - a) / b;
  const double denom = norm_cdf(za) + norm_cdf(zx) - 1.0;
  if (denom < 1e-300) {
    if (underflow_count) ++*underflow_count;
    return std::max(x - params.mu, 1e-8);
  }
  return a + b * (norm_pdf(za) - norm_pdf(zx)) / denom;
}

std::vector<double> background_correct(std::span<const double> column, const BgParams& params,
                                       std::size_t* underflow_count) {
  if (params.sigma <= 0.0 || params.alpha <= 0.0 || params.mu < 0.0)
    fail(Errc::NonFiniteInput, "invalid background parameters");
  std::vector<double> out(column.size());
  for (std::size_t i = 0; i < column.size(); ++i)
    out[i] = background_correct_value(column[i], params, underflow_count);
  return out;
}

IntensityMatrix background_correct_matrix(const IntensityMatrix& matrix, int threads) {
  if (matrix.values.empty()) fail(Errc::EmptyMatrix, "no intensities to correct");
  IntensityMatrix out = matrix;
  const std::size_t n_cols = matrix.values.cols();

  std::vector<std::size_t> underflows(n_cols, 0);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      const auto column = matrix.values.column(c);
      const BgParams params = estimate_bg_params(column);
      out.values.set_column(c, background_correct(column, params, &underflows[c]));
    }
  };

  const int n_threads = std::max(1, std::min<int>(threads, static_cast<int>(n_cols)));
  if (n_threads == 1) {
    work(0, n_cols);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n_cols + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(n_cols, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t c = 0; c < n_cols; ++c) {
    if (underflows[c] > 0)
      logging::warn("preprocess", "column " + std::to_string(c) + ": " +
                                      std::to_string(underflows[c]) +
                                      " underflow fallbacks in background correction");
  }
  out.stage = Stage::bg_corrected;
  return out;
}

}  // namespace exsplice
