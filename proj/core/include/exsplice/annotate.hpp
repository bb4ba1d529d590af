#pragma once

#include <map>
#include <string>
#include <vector>

#include "exsplice/annotation.hpp"
#include "exsplice/results.hpp"

namespace exsplice {

/// Cluster -> unique gene symbol map. Clusters with zero distinct symbols are
/// dropped as "unassigned", with two or more as "ambiguous".
struct GeneMap {
  std::map<std::string, std::string> cluster_to_gene;
  std::map<std::string, std::string> dropped;  // cluster -> reason
};

GeneMap cluster_gene_map(const AnnotationTable& transcript_annotation);

struct AnnotatedResult {
  GeneTestResult result;
  std::string gene_symbol;     // "-" when unmapped
  std::string dropped_reason;  // empty, "unassigned" or "ambiguous"
};

/// Joins gene symbols onto results; never reorders or changes statistics.
/// With drop_ambiguous, rows for dropped clusters are removed instead of
/// being kept with a reason.
std::vector<AnnotatedResult> annotate_results(const std::vector<GeneTestResult>& results,
                                              const GeneMap& map, bool drop_ambiguous = false);

void write_dropped_report(const GeneMap& map, const std::string& path);

}  // namespace exsplice
