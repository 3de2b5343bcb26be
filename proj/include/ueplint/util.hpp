#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace ueplint {

/// Reads a file in binary mode. nullopt when the file cannot be opened or read.
std::optional<std::string> read_file_bytes(const std::filesystem::path& path);

/// Writes text to a file, truncating. Returns false on failure.
bool write_text_file(const std::filesystem::path& path, std::string_view text);

std::string_view trim(std::string_view s);
std::string ascii_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b);

/// Parses a decimal number, requiring the whole (trimmed) string to be consumed.
std::optional<double> parse_decimal(std::string_view s);

/// Shortest plain-decimal rendering: 90 -> "90", 72.5 -> "72.5".
std::string format_number(double value);

/// Forward-slash rendering of a path.
std::string generic_path(const std::filesystem::path& p);

}  // namespace ueplint
