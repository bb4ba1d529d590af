#pragma once

#include "exsplice/dataset.hpp"

namespace exsplice {

/// Across-array quantile normalization. Every column takes the vector of
/// row-means of the column-sorted matrix; a run of tied values within a
/// column receives the mean of the reference values at the tied ranks.
/// Requires stage == bg_corrected unless allow_any_stage.
IntensityMatrix quantile_normalize(const IntensityMatrix& matrix, bool allow_any_stage = false);

}  // namespace exsplice
