#include "exsplice/quantile.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "exsplice/errors.hpp"

namespace exsplice {

IntensityMatrix quantile_normalize(const IntensityMatrix& matrix, bool allow_any_stage) {
  if (matrix.values.empty()) fail(Errc::EmptyMatrix, "nothing to normalize");
  if (!allow_any_stage && matrix.stage != Stage::bg_corrected)
    fail(Errc::WrongStage, std::string("expected bg_corrected input, got ") +
                               stage_name(matrix.stage));

  const std::size_t n_rows = matrix.values.rows();
  const std::size_t n_cols = matrix.values.cols();

  // Rank each column (stable in the original row order) and accumulate the
  // sorted-value row means in a fixed column order.
  std::vector<std::vector<std::size_t>> order(n_cols, std::vector<std::size_t>(n_rows));
  std::vector<double> reference(n_rows, 0.0);
  for (std::size_t c = 0; c < n_cols; ++c) {
    auto& idx = order[c];
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return matrix.values(a, c) < matrix.values(b, c);
    });
    for (std::size_t r = 0; r < n_rows; ++r) reference[r] += matrix.values(idx[r], c);
  }
  for (double& v : reference) v /= static_cast<double>(n_cols);

  IntensityMatrix out = matrix;
  for (std::size_t c = 0; c < n_cols; ++c) {
    const auto& idx = order[c];
    std::size_t run_begin = 0;
    while (run_begin < n_rows) {
      std::size_t run_end = run_begin + 1;
      const double value = matrix.values(idx[run_begin], c);
      while (run_end < n_rows && matrix.values(idx[run_end], c) == value) ++run_end;
      double mean_ref = 0.0;
      for (std::size_t k = run_begin; k < run_end; ++k) mean_ref += reference[k];
      mean_ref /= static_cast<double>(run_end - run_begin);
      for (std::size_t k = run_begin; k < run_end; ++k) out.values(idx[k], c) = mean_ref;
      run_begin = run_end;
    }
  }
  out.stage = Stage::normalized;
  return out;
}

}  // namespace exsplice
