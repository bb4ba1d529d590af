#include "exsplice/annotation.hpp"

#include <algorithm>
#include <charconv>

#include "exsplice/errors.hpp"
#include "exsplice/io.hpp"
#include "exsplice/text.hpp"

namespace exsplice {

namespace {

// One CSV record; quotes may not span lines.
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool in_quotes = false;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          i += 2;
          continue;
        }
        in_quotes = false;
        ++i;
        if (i < line.size() && line[i] != ',')
          fail(Errc::MalformedQuoting,
               "line " + std::to_string(line_no) + ": text after closing quote");
        continue;
      }
      cur.push_back(c);
      ++i;
    } else {
      if (c == '"') {
        if (!cur.empty())
          fail(Errc::MalformedQuoting,
               "line " + std::to_string(line_no) + ": quote inside unquoted field");
        in_quotes = true;
        ++i;
      } else if (c == ',') {
        fields.push_back(std::move(cur));
        cur.clear();
        ++i;
      } else {
        cur.push_back(c);
        ++i;
      }
    }
  }
  if (in_quotes)
    fail(Errc::MalformedQuoting, "line " + std::to_string(line_no) + ": unterminated quote");
  fields.push_back(std::move(cur));
  return fields;
}

std::vector<std::string> parse_gene_assignment(std::string_view text) {
  std::vector<std::string> symbols;
  auto value = trim(text);
  if (value.empty() || value == "---") return symbols;
  for (auto alt : split_on(value, " /// ")) {
    auto parts = split_on(alt, " // ");
    if (parts.size() >= 2) {
      auto sym = trim(parts[1]);
      if (!sym.empty()) symbols.emplace_back(sym);
    }
  }
  return symbols;
}

}  // namespace

AnnotationTable parse_annotation_csv_text(std::string_view text, AnnotationKind kind) {
  auto lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && (trim(lines[first]).empty() || lines[first].starts_with('#')))
    ++first;
  if (first >= lines.size()) fail(Errc::EmptyBody, "annotation file has no header");

  auto header = split_csv_line(lines[first], first + 1);
  const char* id_col = kind == AnnotationKind::transcript ? "transcript_cluster_id" : "probeset_id";
  const char* value_col = kind == AnnotationKind::transcript ? "gene_assignment" : "crosshyb_type";
  int id_idx = -1, value_idx = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    auto name = trim(header[i]);
    if (name == id_col) id_idx = static_cast<int>(i);
    if (name == value_col) value_idx = static_cast<int>(i);
  }
  if (id_idx < 0) fail(Errc::MissingColumn, id_col);
  if (value_idx < 0) fail(Errc::MissingColumn, value_col);

  AnnotationTable table;
  table.kind = kind;
  for (std::size_t li = first + 1; li < lines.size(); ++li) {
    if (trim(lines[li]).empty() || lines[li].starts_with('#')) continue;
    auto fields = split_csv_line(lines[li], li + 1);
    auto get = [&](int idx) -> std::string_view {
      return idx < static_cast<int>(fields.size()) ? std::string_view(fields[idx])
                                                   : std::string_view{};
    };
    std::string id(trim(get(id_idx)));
    if (id.empty())
      fail(Errc::MissingColumn, "line " + std::to_string(li + 1) + ": empty " + id_col);

    AnnotationRow row;
    if (kind == AnnotationKind::transcript) {
      row.gene_symbols = parse_gene_assignment(get(value_idx));
    } else {
      auto raw = trim(get(value_idx));
      if (!raw.empty() && raw != "---") {
        int v = 0;
        auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
        if (ec != std::errc{} || ptr != raw.data() + raw.size() || v < 1 || v > 3)
          fail(Errc::BadCrosshybValue,
               "line " + std::to_string(li + 1) + ": '" + std::string(raw) + "'");
        row.crosshyb_class = v;
      }
    }
    table.rows[id] = std::move(row);
  }
  return table;
}

AnnotationTable parse_annotation_csv(const std::string& path, AnnotationKind kind) {
  return parse_annotation_csv_text(read_file_bytes(path), kind);
}

TranscriptModelSet parse_transcript_models_text(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) fail(Errc::EmptyBody, "transcript model file has no content");
  if (trim(lines[0]) != "gene_symbol\ttranscript_id\tchrom\tstrand\texon_start\texon_stop")
    fail(Errc::MissingHeader, "unexpected transcript model header");

  TranscriptModelSet set;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) continue;
    auto fields = split(lines[li], '\t');
    if (fields.size() != 6)
      fail(Errc::MissingColumn, "line " + std::to_string(li + 1) + ": expected 6 fields");
    std::string gene(trim(fields[0]));
    std::string transcript(trim(fields[1]));
    std::string chrom(trim(fields[2]));
    auto strand_field = trim(fields[3]);
    if (strand_field != "+" && strand_field != "-")
      fail(Errc::BadStrand,
           "line " + std::to_string(li + 1) + ": '" + std::string(strand_field) + "'");
    const char strand = strand_field[0];

    auto parse_long = [&](std::string_view s) -> long {
      long v = 0;
      auto t = trim(s);
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc{} || ptr != t.data() + t.size())
        fail(Errc::MissingColumn,
             "line " + std::to_string(li + 1) + ": bad coordinate '" + std::string(t) + "'");
      return v;
    };
    Exon exon{parse_long(fields[4]), parse_long(fields[5])};
    if (exon.start >= exon.stop)
      fail(Errc::InvertedExon, "line " + std::to_string(li + 1) + ": " +
                                   std::to_string(exon.start) + " >= " +
                                   std::to_string(exon.stop));

    auto& entry = set.genes[gene];
    if (entry.transcripts.empty()) {
      entry.strand = strand;
      entry.chromosome = chrom;
    } else if (entry.strand != strand || entry.chromosome != chrom) {
      fail(Errc::InconsistentHierarchy,
           "gene '" + gene + "' has conflicting strand/chromosome at line " +
               std::to_string(li + 1));
    }
    auto it = std::find_if(entry.transcripts.begin(), entry.transcripts.end(),
                           [&](const TranscriptModel& t) { return t.transcript_id == transcript; });
    if (it == entry.transcripts.end()) {
      entry.transcripts.push_back(TranscriptModel{transcript, {exon}});
    } else {
      it->exons.push_back(exon);
    }
  }

  for (auto& [gene, entry] : set.genes) {
    for (auto& transcript : entry.transcripts) {
      std::sort(transcript.exons.begin(), transcript.exons.end(),
                [](const Exon& a, const Exon& b) { return a.start < b.start; });
      for (std::size_t i = 1; i < transcript.exons.size(); ++i) {
        if (transcript.exons[i].start <= transcript.exons[i - 1].stop)
          fail(Errc::OverlappingExons, "gene '" + gene + "' transcript '" +
                                           transcript.transcript_id + "' exons overlap");
      }
    }
  }
  return set;
}

TranscriptModelSet parse_transcript_models(const std::string& path) {
  return parse_transcript_models_text(read_file_bytes(path));
}

}  // namespace exsplice
