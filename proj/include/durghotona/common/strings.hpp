#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace durghotona::strings {

/// ASCII-only case fold; multi-byte UTF-8 sequences pass through untouched.
std::string ascii_lower(std::string_view s);

std::string trim(std::string_view s);

/// Collapses every run of ASCII whitespace to a single space and trims.
std::string collapse_whitespace(std::string_view s);

bool iequals(std::string_view a, std::string_view b);

/// Case-insensitive substring test (ASCII fold).
bool icontains(std::string_view haystack, std::string_view needle);

std::vector<std::string> split(std::string_view s, char sep);

/// Replaces invalid UTF-8 sequences with U+FFFD so downstream code can
/// assume well-formed text.
std::string utf8_sanitize(std::string_view bytes);

/// Decodes %XX escapes; malformed escapes are kept literally.
std::string percent_decode(std::string_view s);

/// Replaces every occurrence of `from` with `to`.
std::string replace_all(std::string_view s, std::string_view from, std::string_view to);

}  // namespace durghotona::strings
