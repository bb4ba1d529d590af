#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exsplice/layout.hpp"
#include "exsplice/matrix.hpp"
#include "exsplice/plm.hpp"
#include "exsplice/presence.hpp"
#include "exsplice/sample_sheet.hpp"

namespace exsplice {

/// MAD-standardized per-probeset residual medians of one cluster-level fit.
struct FirmaScores {
  std::string cluster_id;
  std::vector<std::string> probeset_ids;
  Matrix scores;  // probesets x samples
  double mad_used = 0.0;
  bool mad_degenerate = false;  // residual scale < 1e-12: scores forced to 0
};

FirmaScores firma_scores(const PlmFit& fit, const ChipLayout& layout);

/// Per-probeset mean of (group_a score - group_b score) over the paired
/// replicates. Throws UnpairedDesign naming the first replicate missing from
/// either group.
std::map<std::string, double> paired_mean_diff(const FirmaScores& scores,
                                               const SampleSheet& sheet,
                                               const std::string& group_a,
                                               const std::string& group_b);

struct FirmaRankRow {
  std::string probeset_id;
  std::string cluster_id;
  std::string gene_symbol;
  double mean_diff = 0.0;
};

/// Probesets sorted by |mean difference| descending (ties by probeset_id).
struct FirmaRanking {
  std::vector<FirmaRankRow> rows;
};

/// Keeps retained probesets of analyzable clusters only, attaches gene
/// symbols ("-" when unmapped) and sorts.
FirmaRanking rank_firma(const std::map<std::string, double>& diffs, const PresenceReport& report,
                        const ChipLayout& layout,
                        const std::map<std::string, std::string>& cluster_to_gene);

/// Collapses to the best probeset per cluster, order preserved.
FirmaRanking gene_level_ranking(const FirmaRanking& ranking);

void write_firma_tsv(const FirmaRanking& ranking, const std::string& path,
                     std::optional<int> top_n = std::nullopt);

}  // namespace exsplice
