#pragma once

#include <optional>
#include <string>
#include <vector>

namespace exsplice {

enum class TestMethod { anosva_probe, anosva_probeset, de, firma };

const char* test_method_name(TestMethod m);

struct CoefStat {
  std::string label;
  double estimate = 0.0;
  double se = 0.0;
  double statistic = 0.0;
  double p = 1.0;
};

/// Per-transcript-cluster test outcome. p_value is absent for FIRMA rows;
/// p_adjusted is filled by the BH pass over the DE table.
struct GeneTestResult {
  std::string cluster_id;
  TestMethod method = TestMethod::anosva_probe;
  double statistic = 0.0;
  std::optional<double> p_value;
  std::optional<double> p_adjusted;
  std::vector<CoefStat> detail;
  bool flagged = false;  // e.g. zero denominator mean square
};

}  // namespace exsplice
