#include "exsplice/firma.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "exsplice/errors.hpp"
#include "exsplice/io.hpp"
#include "exsplice/mathutil.hpp"

namespace exsplice {

FirmaScores firma_scores(const PlmFit& fit, const ChipLayout& layout) {
  if (fit.level != UnitLevel::cluster)
    fail(Errc::MixedLevels, "FIRMA scores need a cluster-level fit");

  FirmaScores out;
  out.cluster_id = fit.unit_id;
  out.mad_used = fit.residual_scale;
  out.mad_degenerate = fit.residual_scale < 1e-12;

  // probesets in layout order within the cluster
  const auto& probesets = layout.cluster_probesets.at(fit.unit_id);
  out.probeset_ids = probesets;
  const std::size_t n_samples = fit.residuals.cols();
  out.scores = Matrix(probesets.size(), n_samples);
  if (out.mad_degenerate) return out;  // all zeros, flagged

  for (std::size_t e = 0; e < probesets.size(); ++e) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < fit.row_probesets.size(); ++r)
      if (fit.row_probesets[r] == probesets[e]) rows.push_back(r);
    std::vector<double> standardized(rows.size());
    for (std::size_t s = 0; s < n_samples; ++s) {
      for (std::size_t k = 0; k < rows.size(); ++k)
        standardized[k] = fit.residuals(rows[k], s) / fit.residual_scale;
      out.scores(e, s) = median(standardized);
    }
  }
  return out;
}

std::map<std::string, double> paired_mean_diff(const FirmaScores& scores,
                                               const SampleSheet& sheet,
                                               const std::string& group_a,
                                               const std::string& group_b) {
  std::map<std::string, std::size_t> a_by_replicate, b_by_replicate;
  for (std::size_t s = 0; s < sheet.samples.size(); ++s) {
    const auto& info = sheet.samples[s];
    if (info.treatment == group_a) a_by_replicate[info.replicate] = s;
    if (info.treatment == group_b) b_by_replicate[info.replicate] = s;
  }
  const auto replicates = sheet.replicates();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& rep : replicates) {
    const bool in_a = a_by_replicate.count(rep) > 0;
    const bool in_b = b_by_replicate.count(rep) > 0;
    if (!in_a && !in_b) continue;  // replicate only appears in other groups
    if (!in_a || !in_b)
      fail(Errc::UnpairedDesign, "replicate '" + rep + "' is missing from group '" +
                                     (in_a ? group_b : group_a) + "'");
    pairs.emplace_back(a_by_replicate[rep], b_by_replicate[rep]);
  }
  if (pairs.empty()) fail(Errc::UnpairedDesign, "no paired replicates between the two groups");

  std::map<std::string, double> diffs;
  for (std::size_t e = 0; e < scores.probeset_ids.size(); ++e) {
    double sum = 0.0;
    for (const auto& [sa, sb] : pairs) sum += scores.scores(e, sa) - scores.scores(e, sb);
    diffs[scores.probeset_ids[e]] = sum / static_cast<double>(pairs.size());
  }
  return diffs;
}

FirmaRanking rank_firma(const std::map<std::string, double>& diffs, const PresenceReport& report,
                        const ChipLayout& layout,
                        const std::map<std::string, std::string>& cluster_to_gene) {
  FirmaRanking ranking;
  for (const auto& [probeset, diff] : diffs) {
    if (!report.retained(probeset)) continue;
    auto cluster_it = layout.probeset_cluster.find(probeset);
    if (cluster_it == layout.probeset_cluster.end()) continue;
    const std::string& cluster = cluster_it->second;
    if (!report.analyzable(cluster)) continue;
    auto gene_it = cluster_to_gene.find(cluster);
    const std::string gene = gene_it != cluster_to_gene.end() ? gene_it->second : "-";
    ranking.rows.push_back({probeset, cluster, gene, diff});
  }
  std::sort(ranking.rows.begin(), ranking.rows.end(),
            [](const FirmaRankRow& a, const FirmaRankRow& b) {
              const double fa = std::fabs(a.mean_diff);
              const double fb = std::fabs(b.mean_diff);
              if (fa != fb) return fa > fb;
              return a.probeset_id < b.probeset_id;
            });
  return ranking;
}

FirmaRanking gene_level_ranking(const FirmaRanking& ranking) {
  FirmaRanking out;
  std::set<std::string> seen;
  for (const auto& row : ranking.rows)
    if (seen.insert(row.cluster_id).second) out.rows.push_back(row);
  return out;
}

void write_firma_tsv(const FirmaRanking& ranking, const std::string& path,
                     std::optional<int> top_n) {
  std::string out = "rank\tprobeset_id\tcluster_id\tgene_symbol\tmean_diff\n";
  char buf[64];
  std::size_t limit = ranking.rows.size();
  if (top_n && *top_n >= 0) limit = std::min<std::size_t>(limit, *top_n);
  for (std::size_t i = 0; i < limit; ++i) {
    const auto& row = ranking.rows[i];
    std::snprintf(buf, sizeof buf, "%.6g", row.mean_diff);
    out += std::to_string(i + 1) + "\t" + row.probeset_id + "\t" + row.cluster_id + "\t" +
           row.gene_symbol + "\t" + buf + "\n";
  }
  write_file_bytes(path, out);
}

}  // namespace exsplice
