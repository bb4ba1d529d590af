#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exsplice/layout.hpp"
#include "exsplice/matrix.hpp"
#include "exsplice/sample_sheet.hpp"

namespace exsplice {

enum class Scale { linear, log2 };
enum class Stage { raw, bg_corrected, normalized };

const char* stage_name(Stage s);

/// Probes x samples intensities bound to one ChipLayout by checksum.
struct IntensityMatrix {
  Matrix values;
  std::uint64_t layout_checksum = 0;
  Scale scale = Scale::linear;
  Stage stage = Stage::raw;
  std::vector<std::string> sample_names;  // cel_file per column, sheet order
};

/// Loads <dir>/<cel_file>.xarr for every sheet row, columns in sheet order.
/// The stage is taken from the files' "stage=" metadata when all agree.
IntensityMatrix load_dataset(const std::string& dir, const ChipLayout& layout,
                             const SampleSheet& sheet);

/// Re-emits every column as an XARR file with "stage=..." metadata.
void dump_dataset(const IntensityMatrix& matrix, const ChipLayout& layout,
                  const std::string& dir);

/// Throws ChecksumMismatch unless the matrix is bound to this layout.
void require_layout(const IntensityMatrix& matrix, const ChipLayout& layout);

}  // namespace exsplice
