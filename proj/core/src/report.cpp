#include "exsplice/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "exsplice/errors.hpp"
#include "exsplice/io.hpp"
#include "exsplice/text.hpp"

namespace exsplice {

namespace {

constexpr const char* kPalette[8] = {"red",     "blue",    "#2ca02c", "#ff7f0e",
                                     "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string fmt(double v, const char* spec = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

double to_log2(double v) { return std::log2(std::max(v, 1e-8)); }

struct GeneLookup {
  std::string symbol;
  const GeneModelEntry* entry;
};

GeneLookup lookup_gene(const std::string& cluster_id, const TranscriptModelSet& models,
                       const GeneMap& map) {
  auto it = map.cluster_to_gene.find(cluster_id);
  if (it == map.cluster_to_gene.end())
    fail(Errc::ClusterNotMapped, "cluster '" + cluster_id + "' has no unique gene symbol");
  auto gene_it = models.genes.find(it->second);
  if (gene_it == models.genes.end())
    fail(Errc::GeneNotInModels, "gene '" + it->second + "' not in the transcript model set");
  return {it->second, &gene_it->second};
}

void fill_models(ProfilePlotData& data, const GeneModelEntry& entry) {
  // gene model: exons present (with identical coordinates) in every transcript
  std::vector<ProfilePlotData::ExonBox> common;
  if (!entry.transcripts.empty()) {
    for (const Exon& exon : entry.transcripts.front().exons) {
      bool in_all = true;
      for (std::size_t t = 1; t < entry.transcripts.size() && in_all; ++t) {
        const auto& exons = entry.transcripts[t].exons;
        in_all = std::any_of(exons.begin(), exons.end(), [&](const Exon& e) {
          return e.start == exon.start && e.stop == exon.stop;
        });
      }
      if (in_all) common.push_back({exon.start, exon.stop});
    }
  }
  std::sort(common.begin(), common.end(),
            [](const auto& a, const auto& b) { return a.start < b.start; });
  data.gene_model = common;

  for (const auto& transcript : entry.transcripts) {
    data.transcript_ids.push_back(transcript.transcript_id);
    std::vector<ProfilePlotData::ExonBox> boxes;
    for (const Exon& exon : transcript.exons) boxes.push_back({exon.start, exon.stop});
    data.transcript_models.push_back(std::move(boxes));
  }

  // Probesets follow genomic order on the chip, so probeset i links to the
  // i-th exon in ascending-start order on either strand; reverse-strand genes
  // merely count exons from the 3' end when labelled.
  const int n_probesets = static_cast<int>(data.probeset_boundaries.size()) + 1;
  const int n_exons = static_cast<int>(data.gene_model.size());
  for (int i = 0; i < n_probesets && n_exons > 0; ++i)
    data.linkage.emplace_back(i, std::min(i, n_exons - 1));
}

void fill_group_means(ProfilePlotData& data, const SampleSheet& sheet) {
  const auto treatments = sheet.treatments();
  const std::size_t n_points = data.point_probesets.size();
  for (const auto& treatment : treatments) {
    const auto members = sheet.group(treatment);
    std::vector<double> mean(n_points, 0.0);
    for (std::size_t i = 0; i < n_points; ++i) {
      double sum = 0.0;
      for (std::size_t s : members) sum += data.sample_tracks[s][i];
      mean[i] = sum / static_cast<double>(members.size());
    }
    data.group_names.push_back(treatment);
    data.group_means.push_back(std::move(mean));
  }
}

}  // namespace

ProfilePlotData profile_plot_data_probe(const std::string& cluster_id,
                                        const IntensityMatrix& normalized,
                                        const ChipLayout& layout, const SampleSheet& sheet,
                                        const TranscriptModelSet& models, const GeneMap& map) {
  require_layout(normalized, layout);
  const GeneLookup gene = lookup_gene(cluster_id, models, map);
  auto cluster_it = layout.cluster_probesets.find(cluster_id);
  if (cluster_it == layout.cluster_probesets.end())
    fail(Errc::ClusterNotMapped, "cluster '" + cluster_id + "' not in layout");

  ProfilePlotData data;
  data.cluster_id = cluster_id;
  data.gene_symbol = gene.symbol;
  data.strand = gene.entry->strand;
  data.level = PlotLevel::probe;

  std::vector<std::size_t> rows;
  int ordinal = 0;
  for (const auto& probeset : cluster_it->second) {
    if (ordinal > 0) data.probeset_boundaries.push_back(ordinal);
    for (std::size_t row : layout.probeset_probes.at(probeset)) {
      rows.push_back(row);
      data.point_probesets.push_back(probeset);
      ++ordinal;
    }
  }

  for (std::size_t s = 0; s < sheet.samples.size(); ++s) {
    data.sample_names.push_back(sheet.samples[s].cel_file);
    data.sample_groups.push_back(sheet.samples[s].treatment);
    std::vector<double> track(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) track[i] = to_log2(normalized.values(rows[i], s));
    data.sample_tracks.push_back(std::move(track));
  }
  fill_group_means(data, sheet);
  fill_models(data, *gene.entry);
  return data;
}

ProfilePlotData profile_plot_data_probeset(const std::string& cluster_id,
                                           const ExpressionMatrix& probeset_expr,
                                           const ChipLayout& layout, const SampleSheet& sheet,
                                           const TranscriptModelSet& models, const GeneMap& map) {
  if (probeset_expr.level != UnitLevel::probeset)
    fail(Errc::MixedLevels, "probeset-level plot needs probeset expression");
  const GeneLookup gene = lookup_gene(cluster_id, models, map);
  auto cluster_it = layout.cluster_probesets.find(cluster_id);
  if (cluster_it == layout.cluster_probesets.end())
    fail(Errc::ClusterNotMapped, "cluster '" + cluster_id + "' not in layout");

  ProfilePlotData data;
  data.cluster_id = cluster_id;
  data.gene_symbol = gene.symbol;
  data.strand = gene.entry->strand;
  data.level = PlotLevel::probeset;

  std::vector<std::size_t> expr_rows;
  int ordinal = 0;
  for (const auto& probeset : cluster_it->second) {
    auto it = std::lower_bound(probeset_expr.unit_ids.begin(), probeset_expr.unit_ids.end(),
                               probeset);
    if (it == probeset_expr.unit_ids.end() || *it != probeset)
      fail(Errc::EmptyUnit, "probeset '" + probeset + "' missing from the expression matrix");
    if (ordinal > 0) data.probeset_boundaries.push_back(ordinal);
    expr_rows.push_back(static_cast<std::size_t>(it - probeset_expr.unit_ids.begin()));
    data.point_probesets.push_back(probeset);
    ++ordinal;
  }

  for (std::size_t s = 0; s < sheet.samples.size(); ++s) {
    data.sample_names.push_back(sheet.samples[s].cel_file);
    data.sample_groups.push_back(sheet.samples[s].treatment);
    std::vector<double> track(expr_rows.size());
    for (std::size_t i = 0; i < expr_rows.size(); ++i)
      track[i] = probeset_expr.values(expr_rows[i], s);
    data.sample_tracks.push_back(std::move(track));
  }
  fill_group_means(data, sheet);
  fill_models(data, *gene.entry);
  return data;
}

std::string render_svg(const ProfilePlotData& data) {
  const int width = 960;
  const int left = 60, right = 20, top = 40;
  const int profile_h = 280;
  const int gap = 36;
  const int gene_h = 30;
  const int transcript_h = 30;
  const int n_transcripts = static_cast<int>(data.transcript_models.size());
  const int height = top + profile_h + gap + gene_h + 14 + n_transcripts * (transcript_h + 6) + 20;
  const double plot_w = width - left - right;

  const std::size_t n_points = data.point_probesets.size();
  double ymin = 1e300, ymax = -1e300;
  for (const auto& track : data.sample_tracks)
    for (double v : track) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  if (!(ymin < ymax)) {
    ymin -= 1.0;
    ymax += 1.0;
  }
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;

  auto x_of = [&](double ordinal) {
    return left + (ordinal + 0.5) * plot_w / static_cast<double>(n_points);
  };
  auto y_of = [&](double v) { return top + profile_h * (1.0 - (v - ymin) / (ymax - ymin)); };

  // exon slots: distinct boxes over the gene model and all transcripts,
  // ascending (start, stop); default drawing collapses introns to rank space
  std::vector<std::pair<long, long>> slots;
  auto add_slot = [&](const ProfilePlotData::ExonBox& b) {
    slots.emplace_back(b.start, b.stop);
  };
  for (const auto& b : data.gene_model) add_slot(b);
  for (const auto& t : data.transcript_models)
    for (const auto& b : t) add_slot(b);
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());

  long gmin = 0, gmax = 1;
  if (!slots.empty()) {
    gmin = slots.front().first;
    gmax = slots.front().second;
    for (const auto& s : slots) {
      gmin = std::min(gmin, s.first);
      gmax = std::max(gmax, s.second);
    }
  }
  auto slot_rank = [&](const ProfilePlotData::ExonBox& b) {
    return static_cast<int>(std::lower_bound(slots.begin(), slots.end(),
                                             std::make_pair(b.start, b.stop)) -
                            slots.begin());
  };
  auto exon_span = [&](const ProfilePlotData::ExonBox& b) -> std::pair<double, double> {
    if (data.genomic_coords) {
      const double x0 = left + plot_w * (b.start - gmin) / static_cast<double>(gmax - gmin);
      const double x1 = left + plot_w * (b.stop - gmin) / static_cast<double>(gmax - gmin);
      return {x0, x1};
    }
    const int k = slot_rank(b);
    const double slot_w = plot_w / static_cast<double>(slots.size());
    return {left + k * slot_w + 0.1 * slot_w, left + (k + 1) * slot_w - 0.1 * slot_w};
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
  svg += "<rect width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" fill=\"white\"/>\n";
  svg += "<text x=\"" + std::to_string(left) +
         "\" y=\"24\" font-family=\"sans-serif\" font-size=\"18\" font-weight=\"bold\">" +
         data.gene_symbol + " (" + data.strand + ")</text>\n";

  // frame and y labels
  svg += "<rect x=\"" + std::to_string(left) + "\" y=\"" + std::to_string(top) + "\" width=\"" +
         fmt(plot_w) + "\" height=\"" + std::to_string(profile_h) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<text x=\"8\" y=\"" + fmt(y_of(ymax - pad) + 4.0) +
         "\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(ymax - pad, "%.2f") +
         "</text>\n";
  svg += "<text x=\"8\" y=\"" + fmt(y_of(ymin + pad) + 4.0) +
         "\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(ymin + pad, "%.2f") +
         "</text>\n";

  for (int b : data.probeset_boundaries) {
    const double x = left + b * plot_w / static_cast<double>(n_points);
    svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + std::to_string(top) + "\" x2=\"" + fmt(x) +
           "\" y2=\"" + std::to_string(top + profile_h) +
           "\" stroke=\"#aaaaaa\" stroke-width=\"1\" stroke-dasharray=\"4,3\"/>\n";
  }

  auto group_color = [&](const std::string& group) {
    for (std::size_t g = 0; g < data.group_names.size(); ++g)
      if (data.group_names[g] == group) return kPalette[g % 8];
    return kPalette[7];
  };
  auto polyline = [&](const std::vector<double>& values, const char* color, int stroke) {
    std::string points;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) points += " ";
      points += fmt(x_of(static_cast<double>(i))) + "," + fmt(y_of(values[i]));
    }
    return "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"" + std::to_string(stroke) + "\"/>\n";
  };

  for (std::size_t s = 0; s < data.sample_tracks.size(); ++s)
    svg += polyline(data.sample_tracks[s], group_color(data.sample_groups[s]), 1);
  for (std::size_t g = 0; g < data.group_means.size(); ++g)
    svg += polyline(data.group_means[g], group_color(data.group_names[g]), 3);

  // gene model track with probeset linkage
  const int gene_y = top + profile_h + gap;
  svg += "<text x=\"8\" y=\"" + std::to_string(gene_y + 20) +
         "\" font-family=\"sans-serif\" font-size=\"11\">gene</text>\n";
  for (std::size_t e = 0; e < data.gene_model.size(); ++e) {
    const auto [x0, x1] = exon_span(data.gene_model[e]);
    svg += "<rect x=\"" + fmt(x0) + "\" y=\"" + std::to_string(gene_y) + "\" width=\"" +
           fmt(x1 - x0) + "\" height=\"" + std::to_string(gene_h) +
           "\" fill=\"orange\" stroke=\"#b36b00\"/>\n";
  }
  for (const auto& [probeset_idx, exon_idx] : data.linkage) {
    // probeset segment centre along the profile axis
    int begin = probeset_idx == 0 ? 0 : data.probeset_boundaries[probeset_idx - 1];
    int end = probeset_idx < static_cast<int>(data.probeset_boundaries.size())
                  ? data.probeset_boundaries[probeset_idx]
                  : static_cast<int>(n_points);
    const double cx = left + 0.5 * (begin + end) * plot_w / static_cast<double>(n_points);
    const auto [x0, x1] = exon_span(data.gene_model[exon_idx]);
    svg += "<line x1=\"" + fmt(cx) + "\" y1=\"" + std::to_string(top + profile_h) + "\" x2=\"" +
           fmt(0.5 * (x0 + x1)) + "\" y2=\"" + std::to_string(gene_y) +
           "\" stroke=\"#6699ff\" stroke-width=\"1\"/>\n";
  }

  int ty = gene_y + gene_h + 14;
  for (std::size_t t = 0; t < data.transcript_models.size(); ++t) {
    svg += "<text x=\"8\" y=\"" + std::to_string(ty + 18) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + data.transcript_ids[t] +
           "</text>\n";
    const auto& boxes = data.transcript_models[t];
    for (std::size_t e = 0; e < boxes.size(); ++e) {
      const auto [x0, x1] = exon_span(boxes[e]);
      svg += "<rect x=\"" + fmt(x0) + "\" y=\"" + std::to_string(ty) + "\" width=\"" +
             fmt(x1 - x0) + "\" height=\"" + std::to_string(transcript_h) +
             "\" fill=\"#4477cc\" stroke=\"#224488\"/>\n";
      if (e + 1 < boxes.size()) {
        const auto [nx0, nx1] = exon_span(boxes[e + 1]);
        (void)nx1;
        svg += "<line x1=\"" + fmt(x1) + "\" y1=\"" + std::to_string(ty + transcript_h / 2) +
               "\" x2=\"" + fmt(nx0) + "\" y2=\"" + std::to_string(ty + transcript_h / 2) +
               "\" stroke=\"#224488\" stroke-width=\"1\"/>\n";
      }
    }
    ty += transcript_h + 6;
  }

  svg += "</svg>\n";
  return svg;
}

void render_svg_file(const ProfilePlotData& data, const std::string& path) {
  write_file_bytes(path, render_svg(data));
}

std::string plot_data_json(const ProfilePlotData& data) {
  nlohmann::json j;
  j["cluster_id"] = data.cluster_id;
  j["gene_symbol"] = data.gene_symbol;
  j["strand"] = std::string(1, data.strand);
  j["level"] = data.level == PlotLevel::probe ? "probe" : "probeset";
  j["point_probesets"] = data.point_probesets;
  j["probeset_boundaries"] = data.probeset_boundaries;
  j["genomic_coords"] = data.genomic_coords;

  nlohmann::json samples = nlohmann::json::array();
  for (std::size_t s = 0; s < data.sample_names.size(); ++s) {
    samples.push_back({{"name", data.sample_names[s]},
                       {"group", data.sample_groups[s]},
                       {"values", data.sample_tracks[s]}});
  }
  j["samples"] = samples;

  nlohmann::json means = nlohmann::json::array();
  for (std::size_t g = 0; g < data.group_names.size(); ++g)
    means.push_back({{"group", data.group_names[g]}, {"values", data.group_means[g]}});
  j["group_means"] = means;

  nlohmann::json gene_model = nlohmann::json::array();
  for (const auto& box : data.gene_model)
    gene_model.push_back({{"start", box.start}, {"stop", box.stop}});
  j["gene_model"] = gene_model;

  nlohmann::json linkage = nlohmann::json::array();
  for (const auto& [ps, exon] : data.linkage) linkage.push_back({ps, exon});
  j["linkage"] = linkage;

  nlohmann::json transcripts = nlohmann::json::array();
  for (std::size_t t = 0; t < data.transcript_models.size(); ++t) {
    nlohmann::json exons = nlohmann::json::array();
    for (const auto& box : data.transcript_models[t])
      exons.push_back({{"start", box.start}, {"stop", box.stop}});
    transcripts.push_back({{"id", data.transcript_ids[t]}, {"exons", exons}});
  }
  j["transcripts"] = transcripts;
  return j.dump(2) + "\n";
}

void write_plot_data_json(const ProfilePlotData& data, const std::string& path) {
  write_file_bytes(path, plot_data_json(data));
}

std::string format_p_value(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", p);
  return buf;
}

void write_result_table(const std::vector<AnnotatedResult>& rows, const std::string& path,
                        std::optional<int> top_n) {
  std::string out = "cluster_id\tgene_symbol\tstatistic\tp_value\tp_adjusted\tmethod\tdropped_reason\n";
  char buf[64];
  std::size_t limit = rows.size();
  if (top_n && *top_n >= 0) limit = std::min<std::size_t>(limit, *top_n);
  for (std::size_t i = 0; i < limit; ++i) {
    const auto& row = rows[i];
    std::snprintf(buf, sizeof buf, "%.6g", row.result.statistic);
    out += row.result.cluster_id + "\t" + row.gene_symbol + "\t" + buf + "\t";
    out += row.result.p_value ? format_p_value(*row.result.p_value) : std::string("-");
    out += "\t";
    out += row.result.p_adjusted ? format_p_value(*row.result.p_adjusted) : std::string("-");
    out += "\t";
    out += test_method_name(row.result.method);
    out += "\t";
    out += row.dropped_reason.empty() ? "-" : row.dropped_reason;
    out += "\n";
  }
  write_file_bytes(path, out);
}

std::vector<AnnotatedResult> read_result_table(const std::string& path) {
  const std::string text = read_file_bytes(path);
  auto lines = split_lines(text);
  std::vector<AnnotatedResult> rows;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) continue;
    auto fields = split(lines[li], '\t');
    if (fields.size() != 7) fail(Errc::MissingColumn, path + ": line " + std::to_string(li + 1));
    AnnotatedResult row;
    row.result.cluster_id = std::string(trim(fields[0]));
    row.gene_symbol = std::string(trim(fields[1]));
    row.result.statistic = std::stod(std::string(fields[2]));
    if (trim(fields[3]) != "-") row.result.p_value = std::stod(std::string(fields[3]));
    if (trim(fields[4]) != "-") row.result.p_adjusted = std::stod(std::string(fields[4]));
    const auto method = trim(fields[5]);
    if (method == "anosva_probe") row.result.method = TestMethod::anosva_probe;
    else if (method == "anosva_probeset") row.result.method = TestMethod::anosva_probeset;
    else if (method == "de") row.result.method = TestMethod::de;
    else row.result.method = TestMethod::firma;
    if (trim(fields[6]) != "-") row.dropped_reason = std::string(trim(fields[6]));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace exsplice
