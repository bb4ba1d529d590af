#pragma once

#include <span>
#include <string>
#include <vector>

#include "exsplice/matrix.hpp"

namespace exsplice {

struct ColumnLabel {
  enum class Term { intercept, probeset, treatment, interaction, replicate, rep_treat };
  Term term = Term::intercept;
  int i = 0;  // first factor contrast index (1-based)
  int j = 0;  // second factor contrast index for interactions
  std::string text;
};

const char* term_name(ColumnLabel::Term t);

struct LinearFit {
  std::vector<double> coefficients;
  std::vector<double> standard_errors;
  int residual_df = 0;
  double sigma2 = 0.0;
  double rss = 0.0;
  std::vector<ColumnLabel> column_labels;
  std::vector<double> qty;  // Q^T y (length n_obs); tail carries the residual norm
};

/// Least squares by Householder QR (never normal equations). Throws
/// RankDeficient naming the first dependent column. standard_errors are
/// sqrt(sigma2 * diag((X^T X)^-1)) with sigma2 = RSS / (n - p); when n == p
/// sigma2 is 0 and so are the standard errors.
LinearFit solve_least_squares(const Matrix& X, std::span<const double> y,
                              std::span<const ColumnLabel> labels = {});

}  // namespace exsplice
