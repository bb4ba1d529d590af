#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "exsplice/annotation.hpp"
#include "exsplice/layout.hpp"
#include "exsplice/plm.hpp"
#include "exsplice/sample_sheet.hpp"

namespace exsplice {

/// Per-sample presence calls on probeset-level chip effects:
/// present iff log2 value >= threshold.
struct PresenceCalls {
  std::vector<std::string> probeset_ids;
  std::vector<std::string> sample_names;
  std::vector<std::uint8_t> present;  // probeset-major

  bool at(std::size_t probeset, std::size_t sample) const {
    return present[probeset * sample_names.size() + sample] != 0;
  }
};

enum class PresenceRule { any_group, all_groups };

PresenceCalls presence_calls(const ExpressionMatrix& probeset_expr, const SampleSheet& sheet,
                             double threshold = 3.0);

/// A probeset is retained iff it is present in at least one treatment group
/// (absent in at most half of the group's samples) — or in every group under
/// the all_groups rule — and its crosshyb class is 1 or unlisted.
std::set<std::string> filter_probesets(const PresenceCalls& calls, const SampleSheet& sheet,
                                       const AnnotationTable& crosshyb,
                                       PresenceRule rule = PresenceRule::any_group);

struct GroupCall {
  int absent_count = 0;
  int group_size = 0;
};

struct PresenceCounts {
  std::size_t probesets_present = 0;
  std::size_t probesets_total = 0;
  std::size_t clusters_analyzable = 0;
  std::size_t clusters_total = 0;
};

struct PresenceReport {
  std::map<std::string, bool> probeset_present;
  std::map<std::string, bool> cluster_analyzable;
  std::map<std::pair<std::string, std::string>, GroupCall> per_group_calls;
  std::map<std::string, int> cluster_groups_present;  // #groups the cluster is present in
  PresenceCounts counts;

  bool analyzable(const std::string& cluster) const {
    auto it = cluster_analyzable.find(cluster);
    return it != cluster_analyzable.end() && it->second;
  }
  bool retained(const std::string& probeset) const {
    auto it = probeset_present.find(probeset);
    return it != probeset_present.end() && it->second;
  }
};

/// A cluster is present in a group iff at most half of its probesets are
/// absent there; analyzable for splicing iff present in every group and
/// >= 2 of its probesets were retained.
std::set<std::string> filter_clusters(const std::set<std::string>& retained_probesets,
                                      const PresenceCalls& calls, const SampleSheet& sheet,
                                      const ChipLayout& layout);

PresenceReport build_presence_report(const ExpressionMatrix& probeset_expr,
                                     const SampleSheet& sheet, const AnnotationTable& crosshyb,
                                     const ChipLayout& layout, double threshold = 3.0,
                                     PresenceRule rule = PresenceRule::any_group);

/// Clusters eligible for the differential-expression ANOVA: those excluded
/// from the splicing analysis but present in >= 1 group, plus analyzable
/// clusters whose smallest interaction p exceeds alpha_interaction.
std::set<std::string> de_candidates(const PresenceReport& report,
                                    const std::map<std::string, double>& splicing_min_p,
                                    const ChipLayout& layout, double alpha_interaction = 0.1);

void write_presence_report(const PresenceReport& report, const std::string& path);
PresenceReport read_presence_report(const std::string& path);

std::string presence_summary(const PresenceReport& report);

}  // namespace exsplice
