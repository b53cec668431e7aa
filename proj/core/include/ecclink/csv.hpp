#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace ecclink {

// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

// Writes next to the target and renames into place, so a failed write never
// leaves a partial file under the final name.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace ecclink
