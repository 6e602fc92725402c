#include "durghotona/cli/run_config.hpp"

#include <json.hpp>

#include "durghotona/cli/artifacts.hpp"

namespace durghotona::cli {

namespace {

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::filesystem::path& path) {
    if (path.is_absolute()) return path;
    return base / path;
}

}  // namespace

void RunConfig::validate() const {
    if (provider != "openai" && provider != "groq" && provider != "scripted") {
        throw RunConfigInvalid("unknown provider: " + provider);
    }
    if (provider == "scripted" && !script_path) {
        throw RunConfigInvalid("provider 'scripted' requires a script path");
    }
    if (transport.kind != "http" && transport.kind != "file") {
        throw RunConfigInvalid("unknown transport kind: " + transport.kind);
    }
    if (transport.kind == "file" && transport.root.empty()) {
        throw RunConfigInvalid("file transport requires a root directory");
    }
    if (concurrency < 1) throw RunConfigInvalid("concurrency must be >= 1");
    try {
        settings.validate();
    } catch (const std::invalid_argument& e) {
        throw RunConfigInvalid(std::string("settings: ") + e.what());
    }
}

RunConfig parse_run_config(std::string_view bytes, const std::filesystem::path& base_dir) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw RunConfigInvalid(std::string("run config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw RunConfigInvalid("run config must be a JSON object");

    RunConfig config;
    if (doc.contains("sites")) {
        if (!doc["sites"].is_array()) throw RunConfigInvalid("'sites' must be an array of paths");
        for (const auto& site : doc["sites"]) {
            if (!site.is_string()) throw RunConfigInvalid("'sites' entries must be strings");
            config.site_config_paths.push_back(resolve(base_dir, site.get<std::string>()));
        }
    }
    if (doc.contains("provider")) config.provider = doc["provider"].get<std::string>();
    if (doc.contains("settings")) {
        const auto& s = doc["settings"];
        if (s.contains("model")) config.settings.model = s["model"].get<std::string>();
        if (s.contains("temperature")) config.settings.temperature = s["temperature"].get<double>();
        if (s.contains("max_retries")) config.settings.max_retries = s["max_retries"].get<int>();
        if (s.contains("n")) config.settings.n = s["n"].get<int>();
    }
    if (doc.contains("output_dir")) {
        config.output_dir = resolve(base_dir, doc["output_dir"].get<std::string>());
    }
    if (doc.contains("gold_path")) {
        config.gold_path = resolve(base_dir, doc["gold_path"].get<std::string>());
    }
    if (doc.contains("script_path")) {
        config.script_path = resolve(base_dir, doc["script_path"].get<std::string>());
    }
    if (doc.contains("prompts_dir")) {
        config.prompts_dir = resolve(base_dir, doc["prompts_dir"].get<std::string>());
    }
    if (doc.contains("concurrency")) config.concurrency = doc["concurrency"].get<int>();
    if (doc.contains("transport")) {
        const auto& t = doc["transport"];
        if (t.contains("kind")) config.transport.kind = t["kind"].get<std::string>();
        if (t.contains("root")) {
            config.transport.root = resolve(base_dir, t["root"].get<std::string>());
        }
    }
    if (doc.contains("openai_base_url")) {
        config.openai_base_url = doc["openai_base_url"].get<std::string>();
    }
    if (doc.contains("groq_base_url")) {
        config.groq_base_url = doc["groq_base_url"].get<std::string>();
    }
    if (doc.contains("articles_path")) {
        config.articles_path = resolve(base_dir, doc["articles_path"].get<std::string>());
    }
    if (doc.contains("datasets")) {
        for (const auto& d : doc["datasets"]) {
            config.dataset_paths.push_back(resolve(base_dir, d.get<std::string>()));
        }
    }
    config.validate();
    return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::string bytes;
    try {
        bytes = read_file(path);
    } catch (const std::runtime_error& e) {
        throw RunConfigInvalid(e.what());
    }
    return parse_run_config(bytes, path.parent_path());
}

}  // namespace durghotona::cli
