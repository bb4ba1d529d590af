#include "exsplice/xarr.hpp"

#include <bit>
#include <cmath>
#include <cstring>

#include "exsplice/errors.hpp"
#include "exsplice/io.hpp"

namespace exsplice {

namespace {

constexpr char kMagic[4] = {'X', 'A', 'R', 'R'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
  put_u32(out, static_cast<std::uint32_t>(v & 0xffffffffULL));
  put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

struct Reader {
  std::string_view bytes;
  std::size_t pos = 0;

  void need(std::size_t n) {
    if (pos + n > bytes.size())
      fail(Errc::TruncatedFile, "expected " + std::to_string(n) + " more bytes at offset " +
                                    std::to_string(pos));
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(bytes[pos + i]);
    pos += 4;
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t lo = u32();
    std::uint64_t hi = u32();
    return lo | (hi << 32);
  }
};

}  // namespace

std::string encode_xarr(const std::vector<double>& values, const ChipLayout& layout,
                        std::string_view meta) {
  if (values.size() != layout.n_probes())
    fail(Errc::LengthMismatch, "got " + std::to_string(values.size()) + " values for " +
                                   std::to_string(layout.n_probes()) + " probes");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0)
      fail(Errc::NonFiniteValue, "value at probe index " + std::to_string(i));
  }

  std::string out;
  out.reserve(24 + meta.size() + 4 * values.size());
  out.append(kMagic, 4);
  put_u32(out, kVersion);
  put_u64(out, layout.checksum);
  put_u32(out, static_cast<std::uint32_t>(values.size()));
  put_u32(out, static_cast<std::uint32_t>(meta.size()));
  out.append(meta);
  for (double v : values) {
    const auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(v));
    put_u32(out, bits);
  }
  return out;
}

void write_xarr(const std::vector<double>& values, const ChipLayout& layout,
                const std::string& path, std::string_view meta) {
  write_file_bytes(path, encode_xarr(values, layout, meta));
}

XarrFile decode_xarr(std::string_view bytes, const ChipLayout& layout) {
  Reader r{bytes};
  r.need(4);
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) fail(Errc::BadMagic, "not an XARR file");
  r.pos = 4;
  const std::uint32_t version = r.u32();
  if (version != kVersion)
    fail(Errc::UnsupportedVersion, "version " + std::to_string(version));
  XarrFile file;
  file.layout_checksum = r.u64();
  const std::uint32_t n = r.u32();
  const std::uint32_t meta_len = r.u32();
  if (n != layout.n_probes())
    fail(Errc::ProbeCountMismatch, "file has " + std::to_string(n) + " probes, layout has " +
                                       std::to_string(layout.n_probes()));
  if (file.layout_checksum != layout.checksum)
    fail(Errc::ChecksumMismatch, "file was written against a different layout");
  r.need(meta_len);
  file.meta.assign(bytes.substr(r.pos, meta_len));
  r.pos += meta_len;
  file.values.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t bits = r.u32();
    file.values[i] = static_cast<double>(std::bit_cast<float>(bits));
  }
  if (r.pos != bytes.size())
    fail(Errc::TruncatedFile,
         "trailing bytes after payload (offset " + std::to_string(r.pos) + ")");
  return file;
}

XarrFile parse_xarr_file(const std::string& path, const ChipLayout& layout) {
  return decode_xarr(read_file_bytes(path), layout);
}

std::vector<double> parse_xarr(const std::string& path, const ChipLayout& layout) {
  return parse_xarr_file(path, layout).values;
}

}  // namespace exsplice
