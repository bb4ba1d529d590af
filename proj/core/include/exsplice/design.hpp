#pragma once

#include <string>
#include <vector>

#include "exsplice/linalg.hpp"
#include "exsplice/matrix.hpp"

namespace exsplice {

enum class ModelKind { anosva_probe, anosva_probeset, de_probe };

struct Observation {
  int probeset = 0;   // 0-based level indices
  int treatment = 0;
  int replicate = 0;
};

struct DesignSpec {
  ModelKind model = ModelKind::anosva_probe;
  int n_probesets = 0;
  int n_treatments = 0;
  int n_replicates = 0;
  std::vector<Observation> observations;
  std::vector<std::string> probeset_labels;
  std::vector<std::string> treatment_labels;
  std::vector<std::string> replicate_labels;
};

struct Design {
  Matrix X;
  std::vector<ColumnLabel> labels;
};

/// Sum-contrast value of a factor level for contrast column j:
/// +1 if level == j, -1 if level is the last level, else 0
/// (level and j 0-based, j in [0, n_levels-1)).
inline double sum_contrast(int level, int j, int n_levels) {
  if (level == j) return 1.0;
  if (level == n_levels - 1) return -1.0;
  return 0.0;
}

/// Column order: intercept, probeset block, treatment block, interaction
/// block (anosva models only), replicate block, replicate:treatment block.
/// Interaction columns iterate probeset contrasts outer, treatment contrasts
/// inner; likewise replicate outer for replicate:treatment.
Design build_design(const DesignSpec& spec);

}  // namespace exsplice
