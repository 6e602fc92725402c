#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "durghotona/llmgate/settings.hpp"

namespace durghotona::cli {

class RunConfigInvalid : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything a pipeline run needs. Relative paths in the JSON document
/// resolve against the config file's directory.
struct RunConfig {
    std::vector<std::filesystem::path> site_config_paths;
    std::string provider = "scripted";  // openai | groq | scripted
    llmgate::LlmSettings settings;
    std::filesystem::path output_dir = "out";
    std::optional<std::filesystem::path> gold_path;
    std::optional<std::filesystem::path> script_path;  // required for scripted
    std::optional<std::filesystem::path> prompts_dir;
    int concurrency = 4;

    struct TransportConfig {
        std::string kind = "http";  // http | file
        std::filesystem::path root;  // file transport serving root
    };
    TransportConfig transport;

    std::string openai_base_url = "https://api.openai.com";
    std::string groq_base_url = "https://api.groq.com/openai";

    /// Input override for the extract stage; defaults to
    /// output_dir/articles.jsonl.
    std::optional<std::filesystem::path> articles_path;
    /// Dataset files for the evaluate stage (one per model).
    std::vector<std::filesystem::path> dataset_paths;

    /// Throws RunConfigInvalid on contradictions (scripted provider
    /// without a script, unknown provider or transport kind...).
    void validate() const;
};

RunConfig load_run_config(const std::filesystem::path& path);
RunConfig parse_run_config(std::string_view bytes, const std::filesystem::path& base_dir);

}  // namespace durghotona::cli
