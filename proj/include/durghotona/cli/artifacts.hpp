#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "durghotona/chains/chains.hpp"
#include "durghotona/harvest/harvest.hpp"

namespace durghotona::cli {

/// Writes via a temp file in the same directory plus rename, so a killed
/// run never leaves a truncated artifact.
void atomic_write(const std::filesystem::path& path, const std::string& bytes);

std::string read_file(const std::filesystem::path& path);

/// "YYYY-MM-DDTHH:MM:SSZ"
std::string iso_utc(std::chrono::system_clock::time_point t);
std::chrono::system_clock::time_point parse_iso_utc(const std::string& text);

std::string index_to_jsonl(const std::vector<harvest::NewsIndexEntry>& entries);
std::string articles_to_jsonl(const std::vector<harvest::Article>& articles);
std::vector<harvest::Article> articles_from_jsonl(std::string_view bytes);
std::string warnings_to_jsonl(const std::vector<harvest::Warning>& warnings);
std::string exclusions_to_jsonl(const std::vector<chains::Exclusion>& exclusions);

}  // namespace durghotona::cli
