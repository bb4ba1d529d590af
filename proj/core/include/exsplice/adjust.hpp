#pragma once

#include <span>
#include <vector>

namespace exsplice {

/// Benjamini-Hochberg adjustment; returns values in the input order.
/// adj_(i) = min(1, cumulative min from the largest rank of p_(i) * n / i).
std::vector<double> bh_adjust(std::span<const double> p_values);

}  // namespace exsplice
