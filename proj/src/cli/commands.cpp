#include "durghotona/cli/commands.hpp"

#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <mutex>

#include "durghotona/chains/chains.hpp"
#include "durghotona/cli/artifacts.hpp"
#include "durghotona/common/parallel.hpp"
#include "durghotona/evalkit/evaluate.hpp"
#include "durghotona/evalkit/gold.hpp"
#include "durghotona/harvest/harvest.hpp"
#include "durghotona/llmgate/http_provider.hpp"
#include "durghotona/llmgate/scripted.hpp"
#include "durghotona/netfetch/clock.hpp"
#include "durghotona/netfetch/file_transport.hpp"
#include "durghotona/netfetch/http_transport.hpp"
#include "durghotona/records/csv.hpp"

namespace durghotona::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Logger {
    std::ostream& out;
    std::ostream& err;

    void event(const std::string& level, const std::string& stage,
               const std::string& message) const {
        ordered_json j;
        j["level"] = level;
        j["stage"] = stage;
        j["message"] = message;
        err << j.dump() << "\n";
    }

    void summary(const std::string& line) const { out << line << "\n"; }
};

Logger make_logger(const CommandIo& io) {
    return Logger{io.out ? *io.out : std::cout, io.err ? *io.err : std::cerr};
}

struct TransportBundle {
    std::unique_ptr<netfetch::Transport> transport;
    std::unique_ptr<netfetch::Clock> clock;
};

TransportBundle make_transport(const RunConfig& config) {
    TransportBundle bundle;
    if (config.transport.kind == "file") {
        bundle.transport = std::make_unique<netfetch::FileTransport>(config.transport.root);
        // Deterministic runs: backoff and politeness delays advance a
        // virtual clock, timestamps are pinned.
        bundle.clock = std::make_unique<netfetch::DeterministicClock>();
    } else {
        bundle.transport = std::make_unique<netfetch::HttpTransport>();
        bundle.clock = std::make_unique<netfetch::SystemClock>();
    }
    return bundle;
}

std::string env_or_empty(const char* name) {
    const char* value = std::getenv(name);
    return value ? value : "";
}

struct ProviderBundle {
    std::unique_ptr<llmgate::Provider> provider;
    std::unique_ptr<llmgate::HttpPostClient> post_client;
};

ProviderBundle make_provider(const RunConfig& config) {
    ProviderBundle bundle;
    if (config.provider == "scripted") {
        bundle.provider = std::make_unique<llmgate::ScriptedProvider>(
            llmgate::ScriptedProvider::rules_from_json(read_file(*config.script_path)));
        return bundle;
    }
    llmgate::HttpProviderConfig provider_config;
    provider_config.name = config.provider;
    if (config.provider == "openai") {
        provider_config.base_url = config.openai_base_url;
        provider_config.api_key = env_or_empty("OPENAI_API_KEY");
    } else {
        provider_config.base_url = config.groq_base_url;
        provider_config.api_key = env_or_empty("GROQ_API_KEY");
    }
    if (provider_config.api_key.empty()) {
        throw llmgate::ProviderAuth("no API key in environment for provider " + config.provider);
    }
    bundle.post_client = llmgate::make_httplib_post_client();
    bundle.provider =
        std::make_unique<llmgate::HttpProvider>(provider_config, *bundle.post_client);
    return bundle;
}

chains::PromptSet load_prompts(const RunConfig& config) {
    if (config.prompts_dir) return chains::PromptSet::load_dir(*config.prompts_dir);
    return chains::PromptSet::defaults();
}

}  // namespace

int cmd_harvest(const RunConfig& config, const CommandIo& io) {
    const Logger log = make_logger(io);
    std::vector<harvest::SiteConfig> sites;
    try {
        config.validate();
        if (config.site_config_paths.empty()) {
            throw RunConfigInvalid("harvest needs at least one site config");
        }
        for (const auto& path : config.site_config_paths) {
            sites.push_back(harvest::load_site_config(read_file(path)));
        }
    } catch (const std::exception& e) {
        log.event("error", "harvest", e.what());
        return kExitInputInvalid;
    }

    TransportBundle net = make_transport(config);
    netfetch::Fetcher fetcher(*net.transport, *net.clock);
    std::vector<harvest::Warning> warnings;
    std::mutex warnings_mutex;
    fetcher.set_warning_sink([&](const std::string& message) {
        std::lock_guard lock(warnings_mutex);
        warnings.push_back({"", "netfetch", message});
    });

    std::vector<harvest::NewsIndexEntry> index;
    for (const auto& site : sites) {
        harvest::IndexResult result = harvest::harvest_index(site, fetcher);
        for (auto& warning : result.warnings) {
            log.event("warning", warning.stage, warning.message);
            std::lock_guard lock(warnings_mutex);
            warnings.push_back(std::move(warning));
        }
        index.insert(index.end(), result.entries.begin(), result.entries.end());
    }
    index = harvest::dedup_entries(std::move(index));

    // Article bodies; per-host politeness lives in the fetcher, so
    // distinct hosts make progress in parallel. Outcomes are collected
    // per index slot to keep artifact ordering independent of scheduling.
    std::vector<std::optional<harvest::Article>> slots(index.size());
    std::vector<std::optional<harvest::Warning>> fetch_warnings(index.size());
    auto site_for = [&sites](const std::string& source) -> const harvest::SiteConfig& {
        for (const auto& site : sites) {
            if (site.source_name == source) return site;
        }
        return sites.front();
    };
    parallel::for_each_index(index.size(), config.concurrency, [&](size_t i) {
        try {
            slots[i] = harvest::fetch_article(index[i], site_for(index[i].source), fetcher);
        } catch (const std::exception& e) {
            fetch_warnings[i] = harvest::Warning{
                index[i].source, "fetch-article",
                std::string(e.what()) + " (" + index[i].link + ")"};
        }
    });
    std::vector<harvest::Article> articles;
    for (auto& slot : slots) {
        if (slot) articles.push_back(std::move(*slot));
    }
    for (auto& warning : fetch_warnings) {
        if (warning) {
            log.event("warning", warning->stage, warning->message);
            warnings.push_back(std::move(*warning));
        }
    }

    try {
        atomic_write(config.output_dir / "index.jsonl", index_to_jsonl(index));
        atomic_write(config.output_dir / "articles.jsonl", articles_to_jsonl(articles));
        atomic_write(config.output_dir / "harvest_warnings.jsonl", warnings_to_jsonl(warnings));
    } catch (const std::exception& e) {
        log.event("error", "harvest", e.what());
        return kExitInputInvalid;
    }

    log.summary("harvest: " + std::to_string(index.size()) + " index entries, " +
                std::to_string(articles.size()) + " articles, " +
                std::to_string(warnings.size()) + " warnings -> " + config.output_dir.string());
    if (articles.empty()) {
        log.event("error", "harvest", "no articles harvested");
        return kExitHarvestFailure;
    }
    return kExitOk;
}

int cmd_extract(const RunConfig& config, const CommandIo& io) {
    const Logger log = make_logger(io);
    std::vector<harvest::Article> articles;
    chains::PromptSet prompts;
    try {
        config.validate();
        const std::filesystem::path articles_file =
            config.articles_path ? *config.articles_path : config.output_dir / "articles.jsonl";
        articles = articles_from_jsonl(read_file(articles_file));
        prompts = load_prompts(config);
    } catch (const std::exception& e) {
        log.event("error", "extract", e.what());
        return kExitInputInvalid;
    }

    try {
        ProviderBundle llm = make_provider(config);
        chains::PipelineResult result =
            chains::run_pipeline(articles, *llm.provider, config.settings, {}, prompts,
                                 config.concurrency);
        atomic_write(config.output_dir / "dataset.csv", records::to_csv(result.dataset));
        atomic_write(config.output_dir / "excluded.jsonl", exclusions_to_jsonl(result.excluded));
        log.summary("extract: " + std::to_string(result.dataset.size()) + " records, " +
                    std::to_string(result.excluded.size()) + " excluded -> " +
                    (config.output_dir / "dataset.csv").string());
        return kExitOk;
    } catch (const llmgate::ProviderAuth& e) {
        log.event("error", "extract", e.what());
        return kExitProviderFailure;
    } catch (const std::exception& e) {
        log.event("error", "extract", e.what());
        return kExitInputInvalid;
    }
}

int cmd_evaluate(const RunConfig& config, const CommandIo& io) {
    const Logger log = make_logger(io);
    try {
        config.validate();
        if (!config.gold_path) throw RunConfigInvalid("evaluate needs a gold path");
        evalkit::GoldSet gold = evalkit::load_gold(read_file(*config.gold_path));

        std::vector<std::filesystem::path> datasets = config.dataset_paths;
        if (datasets.empty()) datasets.push_back(config.output_dir / "dataset.csv");

        evalkit::EvalReport report;
        long scored_total = 0;
        for (const auto& path : datasets) {
            auto records = records::from_csv(read_file(path));
            evalkit::EvalReport part = evalkit::evaluate(records, gold);
            for (const auto& model : part.models()) {
                scored_total += part.model_total(model).scored();
            }
            report.merge(part);
        }

        evalkit::ReportOutput output = evalkit::emit_report(report);
        atomic_write(config.output_dir / "report.txt", output.table);
        atomic_write(config.output_dir / "report.csv", output.plot_csv);
        log.summary(output.table);
        if (scored_total == 0) {
            log.event("warning", "evaluate",
                      "no dataset row matched a gold annotation (all coverage gaps)");
        }
        return kExitOk;
    } catch (const evalkit::GoldInvalid& e) {
        log.event("error", "evaluate", e.what());
        return kExitInputInvalid;
    } catch (const std::exception& e) {
        log.event("error", "evaluate", e.what());
        return kExitInputInvalid;
    }
}

int cmd_run(const RunConfig& config, const CommandIo& io) {
    const Logger log = make_logger(io);
    int code = cmd_harvest(config, io);
    if (code != kExitOk) return code;
    code = cmd_extract(config, io);
    if (code != kExitOk) return code;
    if (config.gold_path) {
        return cmd_evaluate(config, io);
    }
    log.event("info", "run", "no gold path configured; skipping evaluation");
    return kExitOk;
}

}  // namespace durghotona::cli
