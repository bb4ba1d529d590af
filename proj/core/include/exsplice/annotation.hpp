#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exsplice {

enum class AnnotationKind { transcript, probeset };

struct AnnotationRow {
  std::vector<std::string> gene_symbols;  // source order; may be empty or >1
  std::optional<int> crosshyb_class;      // 1..3 when present
};

struct AnnotationTable {
  AnnotationKind kind = AnnotationKind::transcript;
  std::map<std::string, AnnotationRow> rows;
};

/// NetAffx-style CSV. Leading '#' lines are comments; fields may be
/// double-quoted (with "" escapes) and contain commas. The transcript kind
/// requires transcript_cluster_id + gene_assignment; the probeset kind
/// requires probeset_id + crosshyb_type. gene_assignment entries are split on
/// " /// " and the second " // " field of each alternative is the symbol;
/// "---" means unassigned.
AnnotationTable parse_annotation_csv(const std::string& path, AnnotationKind kind);
AnnotationTable parse_annotation_csv_text(std::string_view text, AnnotationKind kind);

struct Exon {
  long start = 0;
  long stop = 0;  // closed interval, start < stop
};

struct TranscriptModel {
  std::string transcript_id;
  std::vector<Exon> exons;  // sorted by start, non-overlapping
};

struct GeneModelEntry {
  char strand = '+';
  std::string chromosome;
  std::vector<TranscriptModel> transcripts;
};

/// Local stand-in for a genome-database query: exon structures per gene.
struct TranscriptModelSet {
  std::map<std::string, GeneModelEntry> genes;
};

/// TSV with header gene_symbol, transcript_id, chrom, strand, exon_start,
/// exon_stop; one exon per row.
TranscriptModelSet parse_transcript_models(const std::string& path);
TranscriptModelSet parse_transcript_models_text(std::string_view text);

}  // namespace exsplice
