#include "exsplice/presence.hpp"

#include <cstdio>

#include "exsplice/errors.hpp"
#include "exsplice/io.hpp"
#include "exsplice/text.hpp"

namespace exsplice {

PresenceCalls presence_calls(const ExpressionMatrix& probeset_expr, const SampleSheet& sheet,
                             double threshold) {
  if (probeset_expr.level != UnitLevel::probeset)
    fail(Errc::MixedLevels, "presence calls need probeset-level expression");
  if (probeset_expr.values.cols() != sheet.samples.size())
    fail(Errc::LengthMismatch, "expression columns do not match sample sheet");

  PresenceCalls calls;
  calls.probeset_ids = probeset_expr.unit_ids;
  for (const auto& s : sheet.samples) calls.sample_names.push_back(s.cel_file);
  calls.present.resize(probeset_expr.unit_ids.size() * sheet.samples.size());
  for (std::size_t p = 0; p < probeset_expr.unit_ids.size(); ++p)
    for (std::size_t s = 0; s < sheet.samples.size(); ++s)
      calls.present[p * sheet.samples.size() + s] =
          probeset_expr.values(p, s) >= threshold ? 1 : 0;
  return calls;
}

namespace {

bool crosshyb_ok(const AnnotationTable& crosshyb, const std::string& probeset) {
  auto it = crosshyb.rows.find(probeset);
  if (it == crosshyb.rows.end()) return true;  // unlisted
  const auto& cls = it->second.crosshyb_class;
  return !cls.has_value() || *cls == 1;
}

// absent in more than half of the group's samples
bool absent_in_group(int absent_count, int group_size) {
  return absent_count > group_size / 2;
}

}  // namespace

std::set<std::string> filter_probesets(const PresenceCalls& calls, const SampleSheet& sheet,
                                       const AnnotationTable& crosshyb, PresenceRule rule) {
  const auto treatments = sheet.treatments();
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& t : treatments) groups.push_back(sheet.group(t));

  std::set<std::string> retained;
  for (std::size_t p = 0; p < calls.probeset_ids.size(); ++p) {
    const auto& probeset = calls.probeset_ids[p];
    if (!crosshyb_ok(crosshyb, probeset)) continue;
    bool any_present = false;
    bool all_present = true;
    for (const auto& members : groups) {
      int absent = 0;
      for (std::size_t s : members)
        if (!calls.at(p, s)) ++absent;
      const bool present = !absent_in_group(absent, static_cast<int>(members.size()));
      any_present = any_present || present;
      all_present = all_present && present;
    }
    if (rule == PresenceRule::any_group ? any_present : all_present) retained.insert(probeset);
  }
  return retained;
}

std::set<std::string> filter_clusters(const std::set<std::string>& retained_probesets,
                                      const PresenceCalls& calls, const SampleSheet& sheet,
                                      const ChipLayout& layout) {
  const auto treatments = sheet.treatments();
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& t : treatments) groups.push_back(sheet.group(t));

  std::map<std::string, std::size_t> probeset_row;
  for (std::size_t p = 0; p < calls.probeset_ids.size(); ++p)
    probeset_row[calls.probeset_ids[p]] = p;

  std::set<std::string> analyzable;
  for (const auto& [cluster, probesets] : layout.cluster_probesets) {
    bool present_everywhere = true;
    for (const auto& members : groups) {
      int absent_probesets = 0;
      for (const auto& probeset : probesets) {
        auto it = probeset_row.find(probeset);
        if (it == probeset_row.end()) {
          ++absent_probesets;
          continue;
        }
        int absent = 0;
        for (std::size_t s : members)
          if (!calls.at(it->second, s)) ++absent;
        if (absent_in_group(absent, static_cast<int>(members.size()))) ++absent_probesets;
      }
      if (absent_probesets > static_cast<int>(probesets.size()) / 2) {
        present_everywhere = false;
        break;
      }
    }
    if (!present_everywhere) continue;
    int n_retained = 0;
    for (const auto& probeset : probesets)
      if (retained_probesets.count(probeset)) ++n_retained;
    if (n_retained >= 2) analyzable.insert(cluster);
  }
  return analyzable;
}

PresenceReport build_presence_report(const ExpressionMatrix& probeset_expr,
                                     const SampleSheet& sheet, const AnnotationTable& crosshyb,
                                     const ChipLayout& layout, double threshold,
                                     PresenceRule rule) {
  const PresenceCalls calls = presence_calls(probeset_expr, sheet, threshold);
  const auto retained = filter_probesets(calls, sheet, crosshyb, rule);

  const auto treatments = sheet.treatments();
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& t : treatments) groups.push_back(sheet.group(t));

  PresenceReport report;
  std::map<std::string, std::size_t> probeset_row;
  for (std::size_t p = 0; p < calls.probeset_ids.size(); ++p)
    probeset_row[calls.probeset_ids[p]] = p;

  for (const auto& probeset : layout.probeset_order) {
    report.probeset_present[probeset] = retained.count(probeset) > 0;
    auto it = probeset_row.find(probeset);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      GroupCall gc;
      gc.group_size = static_cast<int>(groups[g].size());
      if (it != probeset_row.end()) {
        for (std::size_t s : groups[g])
          if (!calls.at(it->second, s)) ++gc.absent_count;
      } else {
        gc.absent_count = gc.group_size;  // never summarized: treat as absent
      }
      report.per_group_calls[{probeset, treatments[g]}] = gc;
    }
  }

  for (const auto& [cluster, probesets] : layout.cluster_probesets) {
    int groups_present = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      int absent_probesets = 0;
      for (const auto& probeset : probesets) {
        const auto& gc = report.per_group_calls.at({probeset, treatments[g]});
        if (absent_in_group(gc.absent_count, gc.group_size)) ++absent_probesets;
      }
      if (absent_probesets <= static_cast<int>(probesets.size()) / 2) ++groups_present;
    }
    report.cluster_groups_present[cluster] = groups_present;

    int n_retained = 0;
    for (const auto& probeset : probesets)
      if (retained.count(probeset)) ++n_retained;
    report.cluster_analyzable[cluster] =
        groups_present == static_cast<int>(groups.size()) && n_retained >= 2;
  }

  report.counts.probesets_total = layout.n_probesets();
  report.counts.probesets_present = retained.size();
  report.counts.clusters_total = layout.n_clusters();
  for (const auto& [cluster, ok] : report.cluster_analyzable)
    if (ok) ++report.counts.clusters_analyzable;
  return report;
}

std::set<std::string> de_candidates(const PresenceReport& report,
                                    const std::map<std::string, double>& splicing_min_p,
                                    const ChipLayout& layout, double alpha_interaction) {
  std::set<std::string> out;
  for (const auto& cluster : layout.cluster_order) {
    const bool analyzable = report.analyzable(cluster);
    if (!analyzable) {
      auto it = report.cluster_groups_present.find(cluster);
      if (it != report.cluster_groups_present.end() && it->second >= 1) out.insert(cluster);
      continue;
    }
    auto it = splicing_min_p.find(cluster);
    if (it != splicing_min_p.end() && it->second > alpha_interaction) out.insert(cluster);
  }
  return out;
}

std::string presence_summary(const PresenceReport& report) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu probesets out of %zu deemed present; transcript clusters to analyse "
                "reduced from %zu to %zu",
                report.counts.probesets_present, report.counts.probesets_total,
                report.counts.clusters_total, report.counts.clusters_analyzable);
  return buf;
}

void write_presence_report(const PresenceReport& report, const std::string& path) {
  std::string out = "# " + presence_summary(report) + "\n";
  out += "kind\tid\tgroup\tvalue\textra\n";
  for (const auto& [probeset, present] : report.probeset_present)
    out += "probeset\t" + probeset + "\t-\t" + (present ? "1" : "0") + "\t-\n";
  for (const auto& [cluster, analyzable] : report.cluster_analyzable) {
    out += "cluster\t" + cluster + "\t-\t" + (analyzable ? "1" : "0") + "\t" +
           std::to_string(report.cluster_groups_present.at(cluster)) + "\n";
  }
  for (const auto& [key, gc] : report.per_group_calls) {
    out += "group_call\t" + key.first + "\t" + key.second + "\t" +
           std::to_string(gc.absent_count) + "\t" + std::to_string(gc.group_size) + "\n";
  }
  write_file_bytes(path, out);
}

PresenceReport read_presence_report(const std::string& path) {
  PresenceReport report;
  auto text = read_file_bytes(path);
  auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    auto line = lines[li];
    if (line.empty() || line.starts_with('#')) continue;
    auto fields = split(line, '\t');
    if (fields.size() != 5) fail(Errc::MissingColumn, path + ": line " + std::to_string(li + 1));
    auto kind = trim(fields[0]);
    if (kind == "kind") continue;  // header
    std::string id(trim(fields[1]));
    if (kind == "probeset") {
      report.probeset_present[id] = trim(fields[3]) == "1";
      if (report.probeset_present[id]) ++report.counts.probesets_present;
      ++report.counts.probesets_total;
    } else if (kind == "cluster") {
      report.cluster_analyzable[id] = trim(fields[3]) == "1";
      report.cluster_groups_present[id] = std::stoi(std::string(trim(fields[4])));
      if (report.cluster_analyzable[id]) ++report.counts.clusters_analyzable;
      ++report.counts.clusters_total;
    } else if (kind == "group_call") {
      GroupCall gc;
      gc.absent_count = std::stoi(std::string(trim(fields[3])));
      gc.group_size = std::stoi(std::string(trim(fields[4])));
      report.per_group_calls[{id, std::string(trim(fields[2]))}] = gc;
    }
  }
  return report;
}

}  // namespace exsplice
