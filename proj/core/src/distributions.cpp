#include "exsplice/distributions.hpp"

#include <cmath>

#include "exsplice/errors.hpp"

namespace exsplice {

namespace {

// Lentz continued fraction for the incomplete beta.
double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 200;
  constexpr double kEps = 1e-12;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double ibeta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                       a * std::log(x) + b * std::log1p(-x);
  const double bt = std::exp(ln_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) return bt * betacf(a, b, x) / a;
  return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

double t_cdf(double x, int df) {
  if (df < 1) fail(Errc::NonPositiveDf, "t_cdf df=" + std::to_string(df));
  if (x == 0.0) return 0.5;
  const double nu = static_cast<double>(df);
  const double tail = 0.5 * ibeta(0.5 * nu, 0.5, nu / (nu + x * x));
  return x > 0.0 ? 1.0 - tail : tail;
}

double f_cdf(double x, int df1, int df2) {
  if (df1 < 1 || df2 < 1)
    fail(Errc::NonPositiveDf, "f_cdf df=(" + std::to_string(df1) + "," + std::to_string(df2) + ")");
  if (x <= 0.0) return 0.0;
  const double d1 = static_cast<double>(df1);
  const double d2 = static_cast<double>(df2);
  return ibeta(0.5 * d1, 0.5 * d2, d1 * x / (d1 * x + d2));
}

}  // namespace exsplice
