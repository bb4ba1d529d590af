#include "exsplice/sample_sheet.hpp"

#include <algorithm>
#include <set>

#include "exsplice/errors.hpp"
#include "exsplice/io.hpp"
#include "exsplice/text.hpp"

namespace exsplice {

std::vector<std::string> SampleSheet::treatments() const {
  std::vector<std::string> out;
  for (const auto& s : samples)
    if (std::find(out.begin(), out.end(), s.treatment) == out.end()) out.push_back(s.treatment);
  return out;
}

std::vector<std::string> SampleSheet::replicates() const {
  std::vector<std::string> out;
  for (const auto& s : samples)
    if (std::find(out.begin(), out.end(), s.replicate) == out.end()) out.push_back(s.replicate);
  return out;
}

std::vector<std::size_t> SampleSheet::group(const std::string& treatment) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (samples[i].treatment == treatment) out.push_back(i);
  return out;
}

SampleSheet parse_sample_sheet_text(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) fail(Errc::EmptyBody, "sample sheet has no content");

  auto header = split(lines[0], '\t');
  int col_cel = -1, col_rep = -1, col_treat = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    auto name = trim(header[i]);
    if (name == "celFile" || name == "cel_file") col_cel = static_cast<int>(i);
    else if (name == "replicate") col_rep = static_cast<int>(i);
    else if (name == "treatment") col_treat = static_cast<int>(i);
  }
  if (col_cel < 0) fail(Errc::MissingColumn, "celFile");
  if (col_rep < 0) fail(Errc::MissingColumn, "replicate");
  if (col_treat < 0) fail(Errc::MissingColumn, "treatment");

  SampleSheet sheet;
  std::set<std::pair<std::string, std::string>> pairs;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) continue;
    auto fields = split(lines[li], '\t');
    auto get = [&](int col) -> std::string {
      if (col >= static_cast<int>(fields.size()))
        fail(Errc::MissingColumn,
             "line " + std::to_string(li + 1) + ": too few fields");
      return std::string(trim(fields[col]));
    };
    SampleInfo s{get(col_cel), get(col_rep), get(col_treat)};
    if (!pairs.insert({s.replicate, s.treatment}).second)
      fail(Errc::DuplicateReplicateTreatmentPair,
           "(" + s.replicate + ", " + s.treatment + ") at line " + std::to_string(li + 1));
    sheet.samples.push_back(std::move(s));
  }
  if (sheet.samples.empty()) fail(Errc::EmptyBody, "sample sheet has a header but no samples");
  return sheet;
}

SampleSheet parse_sample_sheet(const std::string& path) {
  return parse_sample_sheet_text(read_file_bytes(path));
}

}  // namespace exsplice
