#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace cryopulse {

// Writes contents to a temporary sibling, then renames it over the target, so
// a crashed run never leaves a truncated file behind.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

} // namespace cryopulse
