#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace endorsim {

// Reads a whole file; throws IoError.
std::string read_text_file(const std::filesystem::path& path);

// Writes through a sibling temporary file and renames it into place, so a
// failed write never leaves a partial file at `path`.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace endorsim
