#include "exsplice/median_polish.hpp"

#include <cmath>

#include "exsplice/errors.hpp"
#include "exsplice/mathutil.hpp"

namespace exsplice {

MedianPolishResult median_polish(const Matrix& input, int max_iter, double tol) {
  const std::size_t nr = input.rows();
  const std::size_t nc = input.cols();
  if (nr == 0 || nc == 0) fail(Errc::EmptyMatrix, "median polish needs a non-empty matrix");
  for (double v : input.data())
    if (!std::isfinite(v)) fail(Errc::NonFiniteInput, "median polish input contains non-finite values");
  if (max_iter < 1) max_iter = 1;

  MedianPolishResult res;
  res.row_effects.assign(nr, 0.0);
  res.col_effects.assign(nc, 0.0);
  Matrix z = input;

  std::vector<double> buffer(std::max(nr, nc));
  auto row_median = [&](std::size_t r) {
    buffer.assign(z.row(r), z.row(r) + nc);
    return median(buffer);
  };
  auto col_median = [&](std::size_t c) {
    buffer.resize(nr);
    for (std::size_t r = 0; r < nr; ++r) buffer[r] = z(r, c);
    return median(buffer);
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    double max_change = 0.0;

    for (std::size_t r = 0; r < nr; ++r) {
      const double m = row_median(r);
      for (std::size_t c = 0; c < nc; ++c) z(r, c) -= m;
      res.row_effects[r] += m;
      max_change = std::max(max_change, std::fabs(m));
    }
    {
      const double shift = median(res.col_effects);
      for (double& v : res.col_effects) v -= shift;
      res.overall += shift;
      max_change = std::max(max_change, std::fabs(shift));
    }
    for (std::size_t c = 0; c < nc; ++c) {
      const double m = col_median(c);
      for (std::size_t r = 0; r < nr; ++r) z(r, c) -= m;
      res.col_effects[c] += m;
      max_change = std::max(max_change, std::fabs(m));
    }
    {
      const double shift = median(res.row_effects);
      for (double& v : res.row_effects) v -= shift;
      res.overall += shift;
      max_change = std::max(max_change, std::fabs(shift));
    }

    res.iterations = iter + 1;
    if (max_change < tol) {
      res.converged = true;
      break;
    }
  }

  // Residuals are recomputed from the effects so that the additive identity
  // holds up to one rounding of the final sum.
  res.residuals = Matrix(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c)
      res.residuals(r, c) = input(r, c) - ((res.overall + res.row_effects[r]) + res.col_effects[c]);
  return res;
}

}  // namespace exsplice
