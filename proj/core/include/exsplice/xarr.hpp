#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "exsplice/layout.hpp"

namespace exsplice {

/// XARR single-array intensity file (little-endian):
///   bytes 0-3  magic "XARR"
///   u32        version (1)
///   u64        layout checksum (FNV-1a-64 of the layout file bytes)
///   u32        n_probes
///   u32        meta_len
///   meta_len   UTF-8 free-form metadata
///   n_probes   IEEE-754 binary32 intensities in layout order
/// No padding anywhere.
struct XarrFile {
  std::vector<double> values;  // binary32 payload widened to double
  std::string meta;
  std::uint64_t layout_checksum = 0;
};

/// Serializes values (rounded to binary32) bound to the layout's checksum.
/// Deterministic: identical inputs produce identical bytes.
void write_xarr(const std::vector<double>& values, const ChipLayout& layout,
                const std::string& path, std::string_view meta = {});

std::string encode_xarr(const std::vector<double>& values, const ChipLayout& layout,
                        std::string_view meta = {});

XarrFile parse_xarr_file(const std::string& path, const ChipLayout& layout);
XarrFile decode_xarr(std::string_view bytes, const ChipLayout& layout);

/// Values-only convenience wrapper.
std::vector<double> parse_xarr(const std::string& path, const ChipLayout& layout);

}  // namespace exsplice
