#pragma once

namespace exsplice {

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation
/// (<= 200 terms, relative tolerance 1e-12).
double ibeta(double a, double b, double x);

/// Student-t CDF; t_cdf(-x, df) = 1 - t_cdf(x, df).
double t_cdf(double x, int df);

/// F CDF for x >= 0 (0 below).
double f_cdf(double x, int df1, int df2);

}  // namespace exsplice
