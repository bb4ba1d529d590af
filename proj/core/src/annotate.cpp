#include "exsplice/annotate.hpp"

#include <set>

#include "exsplice/errors.hpp"
#include "exsplice/io.hpp"

namespace exsplice {

GeneMap cluster_gene_map(const AnnotationTable& transcript_annotation) {
  if (transcript_annotation.kind != AnnotationKind::transcript)
    fail(Errc::MixedLevels, "gene map needs a transcript annotation table");
  GeneMap map;
  for (const auto& [cluster, row] : transcript_annotation.rows) {
    std::set<std::string> distinct(row.gene_symbols.begin(), row.gene_symbols.end());
    if (distinct.empty()) {
      map.dropped[cluster] = "unassigned";
    } else if (distinct.size() == 1) {
      map.cluster_to_gene[cluster] = *distinct.begin();
    } else {
      map.dropped[cluster] = "ambiguous";
    }
  }
  return map;
}

std::vector<AnnotatedResult> annotate_results(const std::vector<GeneTestResult>& results,
                                              const GeneMap& map, bool drop_ambiguous) {
  std::vector<AnnotatedResult> out;
  out.reserve(results.size());
  for (const auto& result : results) {
    AnnotatedResult row;
    row.result = result;
    auto it = map.cluster_to_gene.find(result.cluster_id);
    if (it != map.cluster_to_gene.end()) {
      row.gene_symbol = it->second;
    } else {
      row.gene_symbol = "-";
      auto dropped_it = map.dropped.find(result.cluster_id);
      row.dropped_reason =
          dropped_it != map.dropped.end() ? dropped_it->second : "unassigned";
      if (drop_ambiguous) continue;
    }
    out.push_back(std::move(row));
  }
  return out;
}

void write_dropped_report(const GeneMap& map, const std::string& path) {
  std::string out = "cluster_id\treason\n";
  for (const auto& [cluster, reason] : map.dropped) out += cluster + "\t" + reason + "\n";
  write_file_bytes(path, out);
}

}  // namespace exsplice
