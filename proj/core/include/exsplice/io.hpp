#pragma once

#include <string>
#include <string_view>

namespace exsplice {

// Reads a whole file as raw bytes. Throws Error(FileNotFound) if unreadable.
std::string read_file_bytes(const std::string& path);

// Writes bytes, overwriting. Throws Error(WriteFailure) on any short write.
void write_file_bytes(const std::string& path, std::string_view bytes);

bool file_exists(const std::string& path);

}  // namespace exsplice
