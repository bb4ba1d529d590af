#include "exsplice/dataset.hpp"

#include <filesystem>

#include "exsplice/errors.hpp"
#include "exsplice/io.hpp"
#include "exsplice/xarr.hpp"

namespace exsplice {

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::raw: return "raw";
    case Stage::bg_corrected: return "bg_corrected";
    case Stage::normalized: return "normalized";
  }
  return "raw";
}

namespace {
Stage stage_from_meta(const std::string& meta) {
  if (meta.find("stage=normalized") != std::string::npos) return Stage::normalized;
  if (meta.find("stage=bg_corrected") != std::string::npos) return Stage::bg_corrected;
  return Stage::raw;
}
}  // namespace

IntensityMatrix load_dataset(const std::string& dir, const ChipLayout& layout,
                             const SampleSheet& sheet) {
  IntensityMatrix matrix;
  matrix.layout_checksum = layout.checksum;
  matrix.values = Matrix(layout.n_probes(), sheet.samples.size());

  bool first = true;
  Stage stage = Stage::raw;
  for (std::size_t s = 0; s < sheet.samples.size(); ++s) {
    const auto& sample = sheet.samples[s];
    const std::string path = dir + "/" + sample.cel_file + ".xarr";
    if (!file_exists(path)) fail(Errc::FileNotFound, "sample '" + sample.cel_file + "': " + path);
    XarrFile file;
    try {
      file = parse_xarr_file(path, layout);
    } catch (const Error& e) {
      fail(e.code(), "sample '" + sample.cel_file + "': " + e.what());
    }
    const Stage file_stage = stage_from_meta(file.meta);
    if (first) {
      stage = file_stage;
      first = false;
    } else if (file_stage != stage) {
      stage = Stage::raw;  // mixed metadata: treat conservatively as raw
    }
    matrix.values.set_column(s, file.values);
    matrix.sample_names.push_back(sample.cel_file);
  }
  matrix.stage = stage;
  matrix.scale = Scale::linear;
  return matrix;
}

void dump_dataset(const IntensityMatrix& matrix, const ChipLayout& layout,
                  const std::string& dir) {
  require_layout(matrix, layout);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::string meta = std::string("stage=") + stage_name(matrix.stage);
  for (std::size_t s = 0; s < matrix.sample_names.size(); ++s) {
    write_xarr(matrix.values.column(s), layout, dir + "/" + matrix.sample_names[s] + ".xarr",
               meta);
  }
}

void require_layout(const IntensityMatrix& matrix, const ChipLayout& layout) {
  if (matrix.layout_checksum != layout.checksum)
    fail(Errc::ChecksumMismatch, "intensity matrix is bound to a different layout");
  if (matrix.values.rows() != layout.n_probes())
    fail(Errc::ProbeCountMismatch, "matrix rows do not match layout probe count");
}

}  // namespace exsplice
