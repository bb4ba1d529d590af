#pragma once

#include <map>
#include <string>
#include <vector>

#include "exsplice/dataset.hpp"
#include "exsplice/layout.hpp"
#include "exsplice/matrix.hpp"

namespace exsplice {

enum class UnitLevel { cluster, probeset };

const char* unit_level_name(UnitLevel level);

/// Probe-level-model fit of one unit: log2 intensity decomposed into probe
/// affinity + per-chip effect + residual by median polish.
struct PlmFit {
  std::string unit_id;
  UnitLevel level = UnitLevel::cluster;
  std::vector<std::string> probe_ids;      // residual rows, layout order
  std::vector<std::string> row_probesets;  // probeset of each residual row
  std::vector<double> probe_affinities;    // log2, median ~ 0
  std::vector<double> chip_effects;        // log2, one per sample
  Matrix residuals;                        // probes x samples, log2
  double residual_scale = 0.0;             // 1.4826 * MAD of residuals
};

/// Units x samples chip-effect matrix, rows sorted by unit_id.
struct ExpressionMatrix {
  std::vector<std::string> unit_ids;
  Matrix values;
  UnitLevel level = UnitLevel::cluster;
  std::vector<std::string> sample_names;
};

/// Fits every unit of the layout at the requested level. The input must be
/// normalized and bound to the layout. Units are fitted independently
/// (threads > 1 splits them) and merged in unit_id order.
std::vector<PlmFit> fit_plm(const IntensityMatrix& normalized, const ChipLayout& layout,
                            UnitLevel level, int threads = 1);

ExpressionMatrix extract_expression(const std::vector<PlmFit>& fits);

struct UnitIntensities {
  Matrix log2_values;                      // probes x samples
  std::vector<std::string> probe_ids;
  std::vector<std::string> row_probesets;  // probeset per probe row
};

/// log2 probe intensities grouped per transcript cluster, rows in layout
/// order with their probeset labels.
std::map<std::string, UnitIntensities> unit_probe_intensities(const IntensityMatrix& normalized,
                                                              const ChipLayout& layout);

void write_expression_tsv(const ExpressionMatrix& expr, const std::string& path);
ExpressionMatrix read_expression_tsv(const std::string& path, UnitLevel level);

}  // namespace exsplice
