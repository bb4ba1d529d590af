#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace exsplice {

struct ProbeRow {
  std::string probe_id;
  std::string probeset_id;
  std::string cluster_id;
};

/// Probe -> probeset -> transcript-cluster hierarchy in source-file order.
/// Probe index i is the zero-based position among data lines; the checksum is
/// FNV-1a-64 over the raw layout file bytes and binds intensity files to the
/// layout they were written against.
struct ChipLayout {
  std::vector<ProbeRow> probes;
  std::vector<std::string> probeset_order;  // first-appearance order
  std::vector<std::string> cluster_order;   // first-appearance order
  std::map<std::string, std::vector<std::size_t>> probeset_probes;
  std::map<std::string, std::vector<std::string>> cluster_probesets;
  std::map<std::string, std::string> probeset_cluster;
  std::uint64_t checksum = 0;

  std::size_t n_probes() const { return probes.size(); }
  std::size_t n_probesets() const { return probeset_order.size(); }
  std::size_t n_clusters() const { return cluster_order.size(); }
};

ChipLayout parse_chip_layout(const std::string& path);
ChipLayout parse_chip_layout_text(std::string_view text);

}  // namespace exsplice
