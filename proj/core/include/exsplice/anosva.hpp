#pragma once

#include <string>
#include <vector>

#include "exsplice/matrix.hpp"
#include "exsplice/results.hpp"
#include "exsplice/sample_sheet.hpp"

namespace exsplice {

/// Probe-level splicing ANOVA: intensity ~ probeset + treatment +
/// probeset:treatment + replicate + replicate:treatment (sum contrasts,
/// random effects fitted as fixed). The reported p_value is the smallest
/// two-sided interaction p; the statistic is the largest |t|.
/// Rows are probes (with their probeset labels); absent/cross-hybridizing
/// probesets must already be removed.
GeneTestResult anosva_probe(const std::string& cluster_id, const Matrix& log2_probe_by_sample,
                            const std::vector<std::string>& row_probesets,
                            const SampleSheet& sheet);

/// Probeset-level variant: one observation per probeset x sample
/// (probeset-level chip effects).
GeneTestResult anosva_probeset(const std::string& cluster_id,
                               const Matrix& probeset_by_sample,
                               const std::vector<std::string>& probeset_ids,
                               const SampleSheet& sheet);

}  // namespace exsplice
