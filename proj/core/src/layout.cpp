#include "exsplice/layout.hpp"

#include <set>

#include "exsplice/errors.hpp"
#include "exsplice/fnv.hpp"
#include "exsplice/io.hpp"
#include "exsplice/text.hpp"

namespace exsplice {

namespace {
constexpr std::string_view kHeader = "probe_id\tprobeset_id\ttranscript_cluster_id";
}

ChipLayout parse_chip_layout_text(std::string_view text) {
  ChipLayout layout;
  layout.checksum = fnv1a64(text);

  auto lines = split_lines(text);
  if (lines.empty()) fail(Errc::EmptyFile, "layout file has no content");
  if (trim(lines[0]) != kHeader)
    fail(Errc::MissingHeader, "expected header '" + std::string(kHeader) + "'");
  if (lines.size() == 1) fail(Errc::EmptyFile, "layout file has a header but no probes");

  std::set<std::string> seen_probes;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto fields = split(lines[li], '\t');
    if (fields.size() != 3)
      fail(Errc::MissingColumn, "line " + std::to_string(li + 1) + ": expected 3 fields, got " +
                                    std::to_string(fields.size()));
    ProbeRow row{std::string(trim(fields[0])), std::string(trim(fields[1])),
                 std::string(trim(fields[2]))};
    if (row.probe_id.empty() || row.probeset_id.empty() || row.cluster_id.empty())
      fail(Errc::MissingColumn, "line " + std::to_string(li + 1) + ": empty field");
    if (!seen_probes.insert(row.probe_id).second)
      fail(Errc::DuplicateProbeId,
           "probe '" + row.probe_id + "' repeated at line " + std::to_string(li + 1));

    auto cluster_it = layout.probeset_cluster.find(row.probeset_id);
    if (cluster_it == layout.probeset_cluster.end()) {
      layout.probeset_cluster.emplace(row.probeset_id, row.cluster_id);
      layout.probeset_order.push_back(row.probeset_id);
      auto& members = layout.cluster_probesets[row.cluster_id];
      if (members.empty()) layout.cluster_order.push_back(row.cluster_id);
      members.push_back(row.probeset_id);
    } else if (cluster_it->second != row.cluster_id) {
      fail(Errc::InconsistentHierarchy, "probeset '" + row.probeset_id +
                                            "' assigned to clusters '" + cluster_it->second +
                                            "' and '" + row.cluster_id + "'");
    }
    layout.probeset_probes[row.probeset_id].push_back(layout.probes.size());
    layout.probes.push_back(std::move(row));
  }
  return layout;
}

ChipLayout parse_chip_layout(const std::string& path) {
  return parse_chip_layout_text(read_file_bytes(path));
}

}  // namespace exsplice
