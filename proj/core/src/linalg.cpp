#include "exsplice/linalg.hpp"

#include <cmath>

#include "exsplice/errors.hpp"

namespace exsplice {

const char* term_name(ColumnLabel::Term t) {
  switch (t) {
    case ColumnLabel::Term::intercept: return "intercept";
    case ColumnLabel::Term::probeset: return "probeset";
    case ColumnLabel::Term::treatment: return "treatment";
    case ColumnLabel::Term::interaction: return "probeset:treatment";
    case ColumnLabel::Term::replicate: return "replicate";
    case ColumnLabel::Term::rep_treat: return "replicate:treatment";
  }
  return "?";
}

LinearFit solve_least_squares(const Matrix& X, std::span<const double> y,
                              std::span<const ColumnLabel> labels) {
  const std::size_t n = X.rows();
  const std::size_t p = X.cols();
  if (y.size() != n) fail(Errc::LengthMismatch, "response length does not match design rows");
  if (n < p) fail(Errc::RankDeficient, "fewer observations than parameters");

  Matrix a = X;  // reduced in place to R (upper triangle)
  std::vector<double> qty(y.begin(), y.end());

  double max_col_norm = 0.0;
  for (std::size_t c = 0; c < p; ++c) {
    double ss = 0.0;
    for (std::size_t r = 0; r < n; ++r) ss += a(r, c) * a(r, c);
    max_col_norm = std::max(max_col_norm, std::sqrt(ss));
  }
  const double rank_tol = std::max(1e-10 * max_col_norm, 1e-300);

  std::vector<double> v(n);
  for (std::size_t k = 0; k < p; ++k) {
    double ss = 0.0;
    for (std::size_t r = k; r < n; ++r) ss += a(r, k) * a(r, k);
    const double norm = std::sqrt(ss);
    if (norm <= rank_tol) {
      const std::string label =
          k < labels.size() ? labels[k].text : "column " + std::to_string(k);
      fail(Errc::RankDeficient, "dependent design column: " + label);
    }
    const double alpha = a(k, k) >= 0.0 ? -norm : norm;
    // Householder vector for column k
    double vss = 0.0;
    for (std::size_t r = k; r < n; ++r) {
      v[r] = a(r, k);
      if (r == k) v[r] -= alpha;
      vss += v[r] * v[r];
    }
    if (vss > 0.0) {
      const double beta = 2.0 / vss;
      for (std::size_t c = k; c < p; ++c) {
        double dot = 0.0;
        for (std::size_t r = k; r < n; ++r) dot += v[r] * a(r, c);
        dot *= beta;
        for (std::size_t r = k; r < n; ++r) a(r, c) -= dot * v[r];
      }
      double dot = 0.0;
      for (std::size_t r = k; r < n; ++r) dot += v[r] * qty[r];
      dot *= beta;
      for (std::size_t r = k; r < n; ++r) qty[r] -= dot * v[r];
    }
    a(k, k) = alpha;
    for (std::size_t r = k + 1; r < n; ++r) a(r, k) = 0.0;
  }

  LinearFit fit;
  fit.column_labels.assign(labels.begin(), labels.end());
  fit.qty = qty;

  // back substitution for the coefficients
  fit.coefficients.assign(p, 0.0);
  for (std::size_t kk = p; kk-- > 0;) {
    double s = qty[kk];
    for (std::size_t c = kk + 1; c < p; ++c) s -= a(kk, c) * fit.coefficients[c];
    fit.coefficients[kk] = s / a(kk, kk);
  }

  double rss = 0.0;
  for (std::size_t r = p; r < n; ++r) rss += qty[r] * qty[r];
  fit.rss = rss;
  fit.residual_df = static_cast<int>(n - p);
  fit.sigma2 = fit.residual_df > 0 ? rss / static_cast<double>(fit.residual_df) : 0.0;

  // diag((X^T X)^-1) = row sums of squares of R^-1
  Matrix rinv(p, p);
  for (std::size_t c = 0; c < p; ++c) {
    for (std::size_t rr = c + 1; rr-- > 0;) {
      double s = (rr == c) ? 1.0 : 0.0;
      for (std::size_t k2 = rr + 1; k2 <= c; ++k2) s -= a(rr, k2) * rinv(k2, c);
      rinv(rr, c) = s / a(rr, rr);
    }
  }
  fit.standard_errors.assign(p, 0.0);
  for (std::size_t rr = 0; rr < p; ++rr) {
    double s = 0.0;
    for (std::size_t c = rr; c < p; ++c) s += rinv(rr, c) * rinv(rr, c);
    fit.standard_errors[rr] = std::sqrt(fit.sigma2 * s);
  }
  return fit;
}

}  // namespace exsplice
