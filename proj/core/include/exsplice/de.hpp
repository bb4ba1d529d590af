#pragma once

#include <string>
#include <vector>

#include "exsplice/matrix.hpp"
#include "exsplice/results.hpp"
#include "exsplice/sample_sheet.hpp"

namespace exsplice {

enum class DeDenominator { interaction, within };

/// Differential-expression ANOVA on probe-level data:
/// intensity ~ probeset + treatment + replicate + replicate:treatment.
/// The treatment F uses the replicate:treatment stratum by default
/// (df (T-1, (R-1)(T-1))); the within variant tests against the residual
/// mean square instead. A zero denominator mean square flags the result and
/// pins p to 0 or 1 by the numerator.
GeneTestResult de_anova(const std::string& cluster_id, const Matrix& log2_probe_by_sample,
                        const std::vector<std::string>& row_probesets, const SampleSheet& sheet,
                        DeDenominator denominator = DeDenominator::interaction);

}  // namespace exsplice
