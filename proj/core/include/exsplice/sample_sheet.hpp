#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace exsplice {

struct SampleInfo {
  std::string cel_file;
  std::string replicate;
  std::string treatment;
};

struct SampleSheet {
  std::vector<SampleInfo> samples;  // file order == column order downstream

  /// Treatment labels in order of first appearance.
  std::vector<std::string> treatments() const;
  /// Replicate labels in order of first appearance.
  std::vector<std::string> replicates() const;
  /// Column indices of the samples in the given treatment group.
  std::vector<std::size_t> group(const std::string& treatment) const;
};

/// Parses a SampleInformation.txt-style TSV. The header must name the
/// celFile (cel_file also accepted), replicate and treatment columns in any
/// order; extra columns are ignored.
SampleSheet parse_sample_sheet(const std::string& path);
SampleSheet parse_sample_sheet_text(std::string_view text);

}  // namespace exsplice
