#pragma once

// Internal helpers shared by the file loaders. Not part of the public API.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uzmorph::detail {

/// Decodes one UTF-8 code point at `pos`, advancing it. Invalid sequences
/// decode to U+FFFD and consume a single byte.
char32_t decode_utf8(std::string_view text, std::size_t& pos);
void append_utf8(std::string& out, char32_t cp);
std::size_t utf8_sequence_length(unsigned char lead);

std::string read_file(const std::filesystem::path& path);

struct Line {
  std::size_t number;  // 1-based
  std::string text;    // comment stripped, right-trimmed
};

/// Splits into lines, drops `#` comments and blank lines.
std::vector<Line> content_lines(std::string_view text);

std::vector<std::string> split(std::string_view text, char sep);
std::vector<std::string> split_whitespace(std::string_view text);
std::string_view trim(std::string_view text);

std::string format_location(const std::filesystem::path& path, std::size_t line);

}  // namespace uzmorph::detail
