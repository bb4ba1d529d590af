#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exsplice/annotate.hpp"
#include "exsplice/annotation.hpp"
#include "exsplice/dataset.hpp"
#include "exsplice/layout.hpp"
#include "exsplice/plm.hpp"
#include "exsplice/sample_sheet.hpp"

namespace exsplice {

enum class PlotLevel { probe, probeset };

/// Everything needed to draw one gene profile: per-sample polylines over
/// probe (or probeset) ordinals, pointwise group means, probeset boundaries,
/// and the gene/transcript exon tracks with probeset-to-exon linkage.
struct ProfilePlotData {
  std::string cluster_id;
  std::string gene_symbol;
  char strand = '+';
  PlotLevel level = PlotLevel::probe;

  std::vector<std::string> point_probesets;  // probeset of each x ordinal
  std::vector<std::string> sample_names;
  std::vector<std::string> sample_groups;
  std::vector<std::vector<double>> sample_tracks;  // log2, one polyline per sample

  std::vector<std::string> group_names;
  std::vector<std::vector<double>> group_means;  // pointwise arithmetic means

  std::vector<int> probeset_boundaries;  // ordinal of the first point of each later probeset

  struct ExonBox {
    long start = 0;
    long stop = 0;
  };
  std::vector<ExonBox> gene_model;                  // exons common to all transcripts
  std::vector<std::pair<int, int>> linkage;         // (probeset index, gene-model exon index)
  std::vector<std::string> transcript_ids;
  std::vector<std::vector<ExonBox>> transcript_models;

  bool genomic_coords = false;  // default: exon-rank space
};

ProfilePlotData profile_plot_data_probe(const std::string& cluster_id,
                                        const IntensityMatrix& normalized,
                                        const ChipLayout& layout, const SampleSheet& sheet,
                                        const TranscriptModelSet& models, const GeneMap& map);

ProfilePlotData profile_plot_data_probeset(const std::string& cluster_id,
                                           const ExpressionMatrix& probeset_expr,
                                           const ChipLayout& layout, const SampleSheet& sheet,
                                           const TranscriptModelSet& models, const GeneMap& map);

/// Deterministic SVG 1.1 text; group colors follow sample-sheet group order
/// (first red, second blue, then a fixed palette); group means use 3x stroke
/// width. Byte-identical output for identical input.
std::string render_svg(const ProfilePlotData& data);
void render_svg_file(const ProfilePlotData& data, const std::string& path);

std::string plot_data_json(const ProfilePlotData& data);
void write_plot_data_json(const ProfilePlotData& data, const std::string& path);

/// Ranked result table: cluster_id, gene_symbol, statistic, p_value,
/// p_adjusted, method, dropped_reason. P-values print in 3-significant-digit
/// scientific notation (1.09e-02 style).
void write_result_table(const std::vector<AnnotatedResult>& rows, const std::string& path,
                        std::optional<int> top_n = std::nullopt);
std::vector<AnnotatedResult> read_result_table(const std::string& path);

std::string format_p_value(double p);

}  // namespace exsplice
