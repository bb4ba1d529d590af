#include "exsplice/adjust.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "exsplice/errors.hpp"

namespace exsplice {

std::vector<double> bh_adjust(std::span<const double> p_values) {
  const std::size_t n = p_values.size();
  for (double p : p_values)
    if (!(p >= 0.0 && p <= 1.0)) fail(Errc::OutOfRangeP, "p-value " + std::to_string(p));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p_values[a] < p_values[b]; });

  std::vector<double> adjusted(n, 0.0);
  double running = 1.0;
  for (std::size_t i = n; i-- > 0;) {
    const double value =
        p_values[order[i]] * static_cast<double>(n) / static_cast<double>(i + 1);
    running = std::min(running, value);
    adjusted[order[i]] = running;
  }
  return adjusted;
}

}  // namespace exsplice
