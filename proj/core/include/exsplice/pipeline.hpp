#pragma once

#include <cstdint>
#include <string>

#include "exsplice/de.hpp"
#include "exsplice/presence.hpp"

namespace exsplice {

/// Configuration for a full end-to-end run, parsed from key=value lines.
/// Required keys: data_dir, layout, sample_sheet, annotation_transcript,
/// annotation_probeset, transcript_models, output_dir.
struct PipelineConfig {
  std::string data_dir;
  std::string layout;
  std::string sample_sheet;
  std::string annotation_transcript;
  std::string annotation_probeset;
  std::string transcript_models;
  std::string output_dir;
  double presence_threshold = 3.0;
  double interaction_alpha = 0.1;
  PresenceRule presence_rule = PresenceRule::any_group;
  DeDenominator de_denominator = DeDenominator::interaction;
  int threads = 1;
  std::uint64_t seed = 0;
  bool drop_ambiguous = false;
};

PipelineConfig parse_pipeline_config(const std::string& path);
PipelineConfig parse_pipeline_config_text(const std::string& text);

/// Stages: ingest, preprocess, summarize, filter, splicing + DE tests,
/// annotate, write tables + manifest. Outputs are a pure function of the
/// inputs and config (no timestamps); the thread count only affects
/// scheduling. Writes into config.output_dir:
///   presence_report.tsv, anosva_probe.tsv, anosva_probeset.tsv, firma.tsv,
///   de.tsv, dropped_clusters.tsv, run_manifest.tsv
void run_pipeline(const PipelineConfig& config);

}  // namespace exsplice
